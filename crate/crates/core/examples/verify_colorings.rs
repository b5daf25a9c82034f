//! Checks a few hand-made colorings and prints the verdicts, including the
//! counterexamples attached to failures.

use zcolor::verify::{check_grundy, check_proper, check_z, find_star};
use zcolor::{Coloring, Graph};

fn main() -> zcolor::Result<()> {
    let c6 = Graph::cycle(6);
    let c = Coloring::new(vec![3, 2, 1, 3, 2, 1])?;
    println!("C6 with 3,2,1,3,2,1");
    println!("  z-coloring: {}", check_z(&c6, &c).to_json());
    println!("  star: {:?}", find_star(&c6, &c));

    let k2 = Graph::complete(2);
    let mono = Coloring::new(vec![1, 1])?;
    println!("K2 with 1,1");
    println!("  proper: {}", check_proper(&k2, &mono)?.to_json());

    let p4 = Graph::path(4);
    let grundy = Coloring::new(vec![1, 3, 2, 1])?;
    println!("P4 with 1,3,2,1");
    println!("  grundy: {}", check_grundy(&p4, &grundy)?.to_json());
    println!("  z-coloring: {}", check_z(&p4, &grundy).to_json());

    let p5 = Graph::path(5);
    let not_grundy = Coloring::new(vec![1, 2, 1, 3, 1])?;
    println!("P5 with 1,2,1,3,1");
    println!("  grundy: {}", check_grundy(&p5, &not_grundy)?.to_json());
    Ok(())
}
