use std::collections::BTreeSet;

use zcolor::atoms::{embed, generate_atoms, prove_upper_bound, AtomCatalog, GenerateOptions};
use zcolor::canon::graph_canonical_form;
use zcolor::families::{gen_gt, gen_ht, gen_rk};
use zcolor::oracle::{exact_z, HARD_LIMIT};
use zcolor::verify::{check_z, Witness};
use zcolor::Graph;

fn triangle_free_d4() -> AtomCatalog {
    generate_atoms(4, GenerateOptions { triangle_free: true, allow_large: false }).unwrap()
}

/// Whether `g` has a z-coloring with exactly `k` colors, found by plain
/// backtracking over proper colorings with a from-scratch leaf test.
fn naive_has_z_coloring(g: &Graph, k: u32) -> bool {
    fn is_z(g: &Graph, c: &[u32], k: u32) -> bool {
        let has = |v: usize, i: u32| g.neighbors(v).iter().any(|&w| c[w] == i);
        let grundy = g.vertices().all(|v| (1..c[v]).all(|i| has(v, i)));
        let dom: Vec<bool> = g.vertices().map(|v| (1..=k).all(|i| i == c[v] || has(v, i))).collect();
        let cd = (1..=k).all(|i| g.vertices().any(|v| c[v] == i && dom[v]));
        let star = g.vertices().any(|u| {
            c[u] == k && dom[u] && (1..k).all(|i| g.neighbors(u).iter().any(|&w| c[w] == i && dom[w]))
        });
        grundy && cd && star
    }
    // Vertices whose neighborhood is fully colored once vertex `v` is.
    let closes: Vec<Vec<usize>> = {
        let mut closes = vec![Vec::new(); g.n()];
        for u in g.vertices() {
            let last = g.neighbors(u).iter().copied().chain([u]).max().unwrap();
            closes[last].push(u);
        }
        closes
    };
    fn go(g: &Graph, closes: &[Vec<usize>], c: &mut Vec<u32>, v: usize, k: u32) -> bool {
        if v == g.n() {
            return (1..=k).all(|i| c.contains(&i)) && is_z(g, c, k);
        }
        for col in 1..=k {
            if g.neighbors(v).iter().all(|&w| w > v || c[w] != col) {
                c[v] = col;
                let grundy_so_far =
                    closes[v].iter().all(|&u| (1..c[u]).all(|i| g.neighbors(u).iter().any(|&w| c[w] == i)));
                if grundy_so_far && go(g, closes, c, v + 1, k) {
                    return true;
                }
            }
        }
        c[v] = 0;
        false
    }
    go(g, &closes, &mut vec![0; g.n()], 0, k)
}

#[test]
fn d3_is_triangle_and_p5() {
    let d3 = generate_atoms(3, GenerateOptions::default()).unwrap();
    let mut graphs: Vec<_> = d3.atoms.iter().map(|a| graph_canonical_form(&a.cg.graph)).collect();
    graphs.sort();
    let mut expected = vec![graph_canonical_form(&Graph::complete(3)), graph_canonical_form(&Graph::path(5))];
    expected.sort();
    assert_eq!(graphs, expected);
}

#[test]
fn small_catalogs() {
    let d1 = generate_atoms(1, GenerateOptions::default()).unwrap();
    assert_eq!(d1.atoms.len(), 1);
    assert_eq!(d1.atoms[0].cg.n(), 1);
    let d2 = generate_atoms(2, GenerateOptions::default()).unwrap();
    assert_eq!(d2.atoms.len(), 1);
    assert_eq!(d2.atoms[0].cg.graph, Graph::complete(2));
    assert!(generate_atoms(0, GenerateOptions::default()).is_err());
    assert!(generate_atoms(4, GenerateOptions::default()).is_err());
}

/// Pins the generated triangle-free catalog for t = 4: 25 colored atoms
/// on 19 graphs, each graph independently shown to be an edge-minimal
/// triangle-free graph with z = 4.
#[test]
fn triangle_free_d4_graphs_are_edge_minimal() {
    let d4 = triangle_free_d4();
    assert_eq!(d4.atoms.len(), 25);
    let mut orders: Vec<usize> = d4.atoms.iter().map(|a| a.cg.n()).collect();
    orders.sort_unstable();
    assert_eq!(orders.first(), Some(&7));
    assert_eq!(orders.last(), Some(&14));

    let mut seen = BTreeSet::new();
    for atom in &d4.atoms {
        let g = &atom.cg.graph;
        assert!(check_z(g, &atom.cg.coloring).pass);
        assert!(!g.has_triangle() && g.is_connected());
        if !seen.insert(graph_canonical_form(g)) {
            continue;
        }
        assert!(g.max_degree() <= 3, "z <= 4 then follows from the degree bound");
        assert!(naive_has_z_coloring(g, 4));
        for (u, v) in g.edges() {
            assert!(!naive_has_z_coloring(&g.without_edge(u, v), 4), "edge {u}-{v} is removable");
        }
    }
    assert_eq!(seen.len(), 19);
}

#[test]
fn largest_atom_is_r4() {
    let d4 = triangle_free_d4();
    let largest: Vec<_> = d4.atoms.iter().filter(|a| a.cg.n() == 14).collect();
    assert_eq!(largest.len(), 1);
    assert!(largest[0].cg.graph.is_tree());
    assert!(zcolor::canon::is_colored_isomorphic(&largest[0].cg, &gen_rk(4).unwrap()));
}

#[test]
fn smallest_atom_sits_inside_h4() {
    let d4 = triangle_free_d4();
    let smallest = d4.atoms.iter().find(|a| a.cg.n() == 7).unwrap();
    let h4 = gen_ht(4).unwrap();
    let full = h4.vertices().find(|&v| h4.degree(v) == 4).unwrap();
    let rest: Vec<usize> = h4.vertices().filter(|&v| v != full).collect();
    let sub = h4.induced(&rest);
    assert_eq!(graph_canonical_form(&sub), graph_canonical_form(&smallest.cg.graph));
    assert_eq!(exact_z(&sub, HARD_LIMIT).unwrap().value, 4);
    assert!(embed(&smallest.cg, &gen_gt(4).unwrap()).is_some());
}

#[test]
fn bound_prover_outcomes() {
    let d4 = triangle_free_d4();
    let g4 = gen_gt(4).unwrap();
    let v = prove_upper_bound(&g4, 4, &d4).unwrap();
    assert!(!v.pass);
    assert!(matches!(v.witness, Some(Witness::Embedding { .. })));

    let c8 = Graph::cycle(8);
    let v = prove_upper_bound(&c8, 4, &d4).unwrap();
    assert!(v.pass);
    assert_eq!(v.witness, Some(Witness::NoEmbedding { atoms_checked: 25 }));
    assert!(prove_upper_bound(&Graph::complete(3), 4, &d4).is_err());
    assert!(prove_upper_bound(&c8, 3, &d4).is_err());
}

#[test]
fn stored_catalogs_regenerate_byte_for_byte() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalogs");
    let cases = [
        ("d3.jsonl", 3, GenerateOptions::default()),
        ("d4_triangle_free.jsonl", 4, GenerateOptions { triangle_free: true, allow_large: false }),
        ("d4.jsonl", 4, GenerateOptions { triangle_free: false, allow_large: true }),
    ];
    for (file, t, opts) in cases {
        let stored = std::fs::read_to_string(dir.join(file)).unwrap();
        let fresh = generate_atoms(t, opts).unwrap();
        assert_eq!(fresh.to_jsonl(), stored, "{file}");
        assert_eq!(AtomCatalog::from_jsonl(&stored).unwrap(), fresh);
    }
}
