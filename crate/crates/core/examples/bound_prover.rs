//! Upper bounds from the atom catalog: a cycle where the catalog proves
//! z <= 3, and G_4, where it cannot and the exact oracle settles z = 3.

use zcolor::atoms::{generate_atoms, prove_upper_bound, GenerateOptions};
use zcolor::families::gen_gt;
use zcolor::oracle::{exact_z, find_z_coloring, HARD_LIMIT};
use zcolor::verify::check_z;
use zcolor::Graph;

fn main() -> zcolor::Result<()> {
    let d4 = generate_atoms(4, GenerateOptions { triangle_free: true, allow_large: false })?;

    let c10 = Graph::cycle(10);
    println!("C10: {}", prove_upper_bound(&c10, 4, &d4)?.to_json());

    let g4 = gen_gt(4)?;
    let verdict = prove_upper_bound(&g4, 4, &d4)?;
    println!("G4:  {}", verdict.to_json());

    if let Some(c) = find_z_coloring(&g4, 3, HARD_LIMIT)? {
        println!("G4 3-color z-coloring {:?} passes: {}", c.colors(), check_z(&g4, &c).pass);
    }
    println!("exact z(G4) = {}", exact_z(&g4, HARD_LIMIT)?.value);
    Ok(())
}
