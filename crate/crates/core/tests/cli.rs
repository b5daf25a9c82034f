use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use zcolor::io;
use zcolor::verify::check_z;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("zcolor-cli-{}-{tag}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn zcolor<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_zcolor")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn color_p5_with_z() {
    let o = zcolor(["color".as_ref(), data("p5.col").as_os_str(), "--heuristic".as_ref(), "z".as_ref()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("z pass"), "{text}");
    let record = text.lines().last().unwrap();
    let (g, c, star) = io::parse_coloring(record).unwrap();
    assert!(c.k() <= 3 && star.is_some());
    assert!(check_z(&g, &c).pass);
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed"));
}

#[test]
fn color_k5_greedy_uses_five() {
    let o = zcolor([
        "color".as_ref(),
        data("k5.col").as_os_str(),
        "--heuristic".as_ref(),
        "greedy".as_ref(),
        "--format".as_ref(),
        "machine".as_ref(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (_, c, _) = io::parse_coloring(&stdout(&o)).unwrap();
    assert_eq!(c.k(), 5);
}

#[test]
fn complementary_on_c6_matches_golden() {
    let dir = scratch("c6");
    let out = dir.join("c6.json");
    let o = zcolor([
        "color".as_ref(),
        data("c6.col").as_os_str(),
        "--heuristic".as_ref(),
        "z".as_ref(),
        "--complementary".as_ref(),
        "--out".as_ref(),
        out.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let got = std::fs::read_to_string(&out).unwrap();
    let (g, c, _) = io::parse_coloring(&got).unwrap();
    let (_, golden, _) =
        io::parse_coloring(&std::fs::read_to_string(data("c6_complementary.json")).unwrap()).unwrap();
    assert_eq!(c, golden);
    assert!(c.k() <= 3 && c.is_proper(&g));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn complementary_library_examples() {
    use zcolor::reduce::{complementary, z_heuristic, ComplementaryOptions};
    use zcolor::{Coloring, Graph};
    let p5 = Graph::path(5);
    let aug = p5.with_vertex(&[0, 2, 4]).unwrap();
    assert_eq!(z_heuristic(&aug, None).unwrap().0.restrict_prefix(5).k(), 2);
    let c6 = Graph::cycle(6);
    let start = Coloring::new(vec![3, 2, 1, 3, 2, 1]).unwrap();
    let golden = std::fs::read_to_string(data("c6_complementary.json")).unwrap();
    let out = complementary(&c6, &start, ComplementaryOptions::default()).unwrap();
    assert_eq!(io::serialize_coloring(&c6, &out, None), golden);
    let k5 = Graph::complete(5);
    assert_eq!(
        complementary(&k5, &Coloring::all_distinct(5), ComplementaryOptions::default()).unwrap().k(),
        5
    );
    assert!(
        complementary(&k5, &Coloring::all_distinct(5), ComplementaryOptions { budget: 0, seed: 0 }).is_err()
    );
}

#[test]
fn verify_levels_and_exit_codes() {
    let c6 = zcolor([
        "verify".as_ref(),
        data("c6.col").as_os_str(),
        data("c6_321.json").as_os_str(),
        "--level".as_ref(),
        "z".as_ref(),
    ]);
    assert_eq!(c6.status.code(), Some(0), "{}", stdout(&c6));

    let k2 = zcolor([
        "verify".as_ref(),
        data("k2.col").as_os_str(),
        data("k2_11.json").as_os_str(),
        "--level".as_ref(),
        "proper".as_ref(),
    ]);
    assert_eq!(k2.status.code(), Some(1));
    assert!(stdout(&k2).contains("monochromatic_edge"), "{}", stdout(&k2));

    let (g, c, _) = io::parse_coloring(&std::fs::read_to_string(data("p4_grundy.json")).unwrap()).unwrap();
    let expected = if check_z(&g, &c).pass { 0 } else { 1 };
    let p4 = zcolor([
        "verify".as_ref(),
        data("p4.col").as_os_str(),
        data("p4_grundy.json").as_os_str(),
        "--level".as_ref(),
        "z".as_ref(),
    ]);
    assert_eq!(p4.status.code(), Some(expected));
    let p4g = zcolor([
        "verify".as_ref(),
        data("p4.col").as_os_str(),
        data("p4_grundy.json").as_os_str(),
        "--level".as_ref(),
        "grundy".as_ref(),
    ]);
    assert_eq!(p4g.status.code(), Some(0));

    let mismatch = zcolor(["verify".as_ref(), data("p5.col").as_os_str(), data("c6_321.json").as_os_str()]);
    assert_eq!(mismatch.status.code(), Some(2));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(zcolor(["color", "/nonexistent/g.col"]).status.code(), Some(2));
    let bad = zcolor(["color".as_ref(), data("bad.col").as_os_str()]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line"));
    assert_eq!(zcolor(["color", "--heuristic", "dsatur", "x.col"]).status.code(), Some(2));
    assert_eq!(zcolor(["exact", "x.col", "--param", "omega"]).status.code(), Some(2));
    assert_eq!(zcolor(["family", "gen", "--name", "Qt", "--k", "3"]).status.code(), Some(2));
    let greedy_comp = zcolor([
        "color".as_ref(),
        data("p5.col").as_os_str(),
        "--heuristic".as_ref(),
        "greedy".as_ref(),
        "--complementary".as_ref(),
    ]);
    assert_eq!(greedy_comp.status.code(), Some(2));
    let too_big = zcolor(["exact".as_ref(), data("g4.col").as_os_str(), "--param".as_ref(), "z".as_ref()]);
    assert_eq!(too_big.status.code(), Some(2));
    assert_eq!(zcolor(["--help"]).status.code(), Some(0));
}

#[test]
fn exact_reports_value() {
    let o = zcolor([
        "exact".as_ref(),
        data("p5.col").as_os_str(),
        "--param".as_ref(),
        "z".as_ref(),
        "--format".as_ref(),
        "machine".as_ref(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 3);
    assert_eq!(v["param"], "z");
    let g4 = zcolor([
        "exact".as_ref(),
        data("g4.col").as_os_str(),
        "--param".as_ref(),
        "z".as_ref(),
        "--limit".as_ref(),
        "19".as_ref(),
    ]);
    assert!(stdout(&g4).starts_with("z = 3\n"));
}

#[test]
fn atoms_round_trip_through_files() {
    let dir = scratch("atoms");
    let cat = dir.join("d3.jsonl");
    let gen = zcolor([
        "atoms".as_ref(),
        "gen".as_ref(),
        "--t".as_ref(),
        "3".as_ref(),
        "--out".as_ref(),
        cat.as_os_str(),
    ]);
    assert_eq!(gen.status.code(), Some(0));
    assert!(stdout(&gen).contains("2 atoms"));
    let tree = dir.join("tree.col");
    std::fs::write(&tree, io::write_dimacs(&zcolor::Graph::star(6))).unwrap();
    let bound = zcolor([
        "atoms".as_ref(),
        "bound".as_ref(),
        tree.as_os_str(),
        "--t".as_ref(),
        "3".as_ref(),
        "--catalog".as_ref(),
        cat.as_os_str(),
    ]);
    assert_eq!(bound.status.code(), Some(0));
    assert!(stdout(&bound).starts_with("PASS: z <= 2"));
    let c6 = zcolor([
        "atoms".as_ref(),
        "bound".as_ref(),
        data("c6.col").as_os_str(),
        "--t".as_ref(),
        "3".as_ref(),
        "--catalog".as_ref(),
        cat.as_os_str(),
    ]);
    assert_eq!(c6.status.code(), Some(1));
    let wrong_t = zcolor([
        "atoms".as_ref(),
        "bound".as_ref(),
        data("c6.col").as_os_str(),
        "--t".as_ref(),
        "4".as_ref(),
        "--catalog".as_ref(),
        cat.as_os_str(),
    ]);
    assert_eq!(wrong_t.status.code(), Some(2));
    let too_large = zcolor([
        "atoms".as_ref(),
        "gen".as_ref(),
        "--t".as_ref(),
        "5".as_ref(),
        "--out".as_ref(),
        cat.as_os_str(),
    ]);
    assert_eq!(too_large.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn family_records_verify() {
    let dir = scratch("family");
    let (col, rec) = (dir.join("r4.col"), dir.join("r4.json"));
    let o = zcolor([
        "family".as_ref(),
        "gen".as_ref(),
        "--name".as_ref(),
        "Rk".as_ref(),
        "--k".as_ref(),
        "4".as_ref(),
        "--out".as_ref(),
        col.as_os_str(),
        "--coloring-out".as_ref(),
        rec.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = zcolor(["verify".as_ref(), col.as_os_str(), rec.as_os_str(), "--level".as_ref(), "z".as_ref()]);
    assert_eq!(v.status.code(), Some(0));
    let ht = zcolor(["family", "gen", "--name", "Ht", "--k", "3"]);
    assert!(stdout(&ht).starts_with("p edge 6 7\n"));
    let no_coloring = zcolor([
        "family".as_ref(),
        "gen".as_ref(),
        "--name".as_ref(),
        "Ft".as_ref(),
        "--k".as_ref(),
        "4".as_ref(),
        "--coloring-out".as_ref(),
        rec.as_os_str(),
    ]);
    assert_eq!(no_coloring.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

fn bench_rows(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn colors_of(rows: &[serde_json::Value], instance_prefix: &str, heuristic: &str) -> u64 {
    rows.iter()
        .find(|r| r["instance"].as_str().unwrap().contains(instance_prefix) && r["heuristic"] == heuristic)
        .and_then(|r| r["colors"].as_u64())
        .unwrap()
}

#[test]
fn bench_examples() {
    let empty = zcolor(["bench"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(empty.stdout.is_empty());

    let g4 = zcolor([
        "bench".as_ref(),
        data("g4.col").as_os_str(),
        "--heuristics".as_ref(),
        "greedy,z".as_ref(),
        "--format".as_ref(),
        "machine".as_ref(),
    ]);
    let rows = bench_rows(&g4);
    assert!(colors_of(&rows, "g4", "z") <= colors_of(&rows, "g4", "greedy"));

    let gnp = zcolor([
        "bench",
        "--random",
        "30,0.5,7",
        "--heuristics",
        "z,iz",
        "--rounds",
        "10",
        "--format",
        "machine",
    ]);
    let rows = bench_rows(&gnp);
    assert!(colors_of(&rows, "gnp", "iz") <= colors_of(&rows, "gnp", "z"));
    assert!(rows.iter().all(|r| r.get("millis").is_none()));

    let timed = zcolor(["bench", "--random", "10,0.5,1", "--timings", "--format", "machine"]);
    assert!(bench_rows(&timed).iter().all(|r| r["millis"].is_number()));
}

#[test]
fn same_seed_same_bytes() {
    let run = || {
        let dir = scratch("det");
        let out = dir.join("iz.json");
        let o = zcolor([
            "color".as_ref(),
            data("g4.col").as_os_str(),
            "--heuristic".as_ref(),
            "iz".as_ref(),
            "--seed".as_ref(),
            "11".as_ref(),
            "--out".as_ref(),
            out.as_os_str(),
        ]);
        let bytes = std::fs::read(&out).unwrap();
        std::fs::remove_dir_all(dir).unwrap();
        (o.stdout, bytes)
    };
    assert_eq!(run(), run());
}
