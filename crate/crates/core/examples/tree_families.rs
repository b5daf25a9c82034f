//! The extremal trees R_k against the sequence a_k, and the binomial trees
//! T_k whose Grundy number outgrows their z-number.

use zcolor::families::{a_sequence, gen_rk, gen_tk};
use zcolor::oracle::{exact_gamma, exact_z, HARD_LIMIT};
use zcolor::verify::check_z;

fn main() -> zcolor::Result<()> {
    let a = a_sequence(8)?;
    println!("{:>2} {:>6} {:>6} {:>6}  canonic coloring", "k", "a_k", "|R_k|", "max deg");
    for k in 1..=8 {
        let r = gen_rk(k)?;
        println!(
            "{k:>2} {:>6} {:>6} {:>6}  z-coloring with {} colors: {}",
            a[k - 1],
            r.n(),
            r.graph.max_degree(),
            r.coloring.k(),
            check_z(&r.graph, &r.coloring).pass
        );
    }

    println!();
    for k in 2..=5 {
        let t = gen_tk(k)?;
        println!(
            "T_{k}: {} vertices, gamma {}, z {}",
            t.n(),
            exact_gamma(&t.graph, HARD_LIMIT)?.value,
            exact_z(&t.graph, HARD_LIMIT)?.value
        );
    }
    Ok(())
}
