//! Iterated z-heuristic against plain greedy over a range of densities.

use rayon::prelude::*;
use zcolor::random::{gnp, seeded};
use zcolor::reduce::{greedy, iterated_z, z_heuristic};

fn main() -> zcolor::Result<()> {
    let densities = [0.1, 0.3, 0.5, 0.7, 0.9];
    let rows: Vec<_> = densities
        .par_iter()
        .map(|&p| -> zcolor::Result<_> {
            let g = gnp(120, p, &mut seeded(2024));
            let order: Vec<usize> = g.vertices().collect();
            let iz = iterated_z(&g, 30, 1)?;
            Ok((p, greedy(&g, &order)?.k(), z_heuristic(&g, None)?.0.k(), iz.best.k(), iz.round_colors))
        })
        .collect::<Result<_, _>>()?;

    println!("{:>5} {:>7} {:>3} {:>3}  per-round colors", "p", "greedy", "z", "iz");
    for (p, gr, z, iz, rounds) in rows {
        println!("{p:>5} {gr:>7} {z:>3} {iz:>3}  {rounds:?}");
    }
    Ok(())
}
