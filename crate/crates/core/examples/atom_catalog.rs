//! Generates the triangle-free catalog for z-number four and summarizes it.
//!
//! Run with `cargo run --release --example atom_catalog`.

use std::time::Instant;

use zcolor::atoms::{generate_atoms, GenerateOptions};
use zcolor::canon::is_colored_isomorphic;
use zcolor::families::gen_rk;

fn main() -> zcolor::Result<()> {
    let d3 = generate_atoms(3, GenerateOptions::default())?;
    println!("D_3: {} atoms, orders {:?}", d3.atoms.len(), orders(&d3));

    let start = Instant::now();
    let d4 = generate_atoms(4, GenerateOptions { triangle_free: true, allow_large: false })?;
    println!("triangle-free D_4: {} atoms in {:.1?}", d4.atoms.len(), start.elapsed());
    println!("  orders {:?}", orders(&d4));
    println!("  stats {:?}", d4.stats);

    let r4 = gen_rk(4)?;
    let largest = d4.atoms.iter().filter(|a| a.cg.n() == d4.max_order());
    for a in largest {
        println!(
            "  order {} atom: tree = {}, matches R_4 = {}",
            a.cg.n(),
            a.cg.graph.is_tree(),
            is_colored_isomorphic(&a.cg, &r4)
        );
    }
    Ok(())
}

fn orders(cat: &zcolor::atoms::AtomCatalog) -> Vec<usize> {
    cat.atoms.iter().map(|a| a.cg.n()).collect()
}
