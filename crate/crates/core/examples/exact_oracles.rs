//! Exact chromatic, Grundy, b-chromatic and z-numbers of small graphs.

use zcolor::families::{gen_ft, gen_gt, gen_ht, gen_kttm, gen_tk};
use zcolor::oracle::{exact_b, exact_chi, exact_gamma, exact_z, HARD_LIMIT};
use zcolor::Graph;

fn main() -> zcolor::Result<()> {
    let graphs = [
        ("P5", Graph::path(5)),
        ("C6", Graph::cycle(6)),
        ("K4,4 - 4K2", gen_kttm(4, 4)?),
        ("K5,5 - 4K2", gen_kttm(5, 4)?),
        ("H3", gen_ht(3)?),
        ("F4", gen_ft(4)?),
        ("T4", gen_tk(4)?.graph),
        ("G4", gen_gt(4)?),
    ];
    println!("{:<12} {:>3} {:>4} {:>5} {:>3} {:>3}", "graph", "n", "chi", "gamma", "b", "z");
    for (name, g) in &graphs {
        println!(
            "{name:<12} {:>3} {:>4} {:>5} {:>3} {:>3}",
            g.n(),
            exact_chi(g, HARD_LIMIT)?.value,
            exact_gamma(g, HARD_LIMIT)?.value,
            exact_b(g, HARD_LIMIT)?.value,
            exact_z(g, HARD_LIMIT)?.value,
        );
    }
    Ok(())
}
