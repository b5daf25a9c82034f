//! Runs every coloring heuristic on one random graph and reports the color
//! counts together with the properties each output satisfies.

use zcolor::random::{gnp, seeded};
use zcolor::reduce::{self, cd_gcd_transform, complementary, grundy_reduce, iterated_z, z_heuristic};
use zcolor::verify::{check_cd, check_grundy, check_z};
use zcolor::{Coloring, Graph};

fn report(name: &str, g: &Graph, c: &Coloring) {
    let grundy = check_grundy(g, c).is_ok_and(|v| v.pass);
    let cd = check_cd(g, c).is_ok_and(|v| v.pass);
    println!("{name:<14} {:>3} colors   grundy {grundy:<5} cd {cd:<5} z {}", c.k(), check_z(g, c).pass);
}

fn main() -> zcolor::Result<()> {
    let g = gnp(80, 0.3, &mut seeded(42));
    println!("G(80, 0.3), seed 42: {} edges, max degree {}\n", g.m(), g.max_degree());

    let order: Vec<usize> = g.vertices().collect();
    let greedy = reduce::greedy(&g, &order)?;
    report("greedy", &g, &greedy);

    let (grundy, trace) = grundy_reduce(&g, &Coloring::all_distinct(g.n()))?;
    report("grundy", &g, &grundy);
    println!("{:<14} {} moves from the all-distinct coloring", "", trace.moves.len());

    let (gcd, trace) = cd_gcd_transform(&g, &grundy)?;
    report("gcd", &g, &gcd);
    println!("{:<14} {} moves, {} classes deleted", "", trace.moves.len(), trace.class_deletions.len());

    let (z, trace) = z_heuristic(&g, None)?;
    report("z", &g, &z);
    println!("{:<14} {} nice-vertex iterations", "", trace.iterations);

    let iz = iterated_z(&g, 20, 7)?;
    report("iz (20 rounds)", &g, &iz.best);
    println!("{:<14} running best {:?}", "", iz.running_best);

    let comp = complementary(&g, &z, Default::default())?;
    report("complementary", &g, &comp);
    Ok(())
}
