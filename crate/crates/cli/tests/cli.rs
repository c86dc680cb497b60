use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use commgraph::algo::matching::hopcroft_karp_max_matching;
use commgraph::io::write_graph;
use commgraph::Graph;

fn commgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_tmp(name: &str, text: &str) -> String {
    let path = scratch(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn gen_ip_conn_writes_partition() {
    let out = scratch("ipconn.part");
    let o = commgraph(&[
        "gen",
        "ip-conn",
        "--n",
        "3",
        "--x",
        "0x5",
        "--y",
        "0x5",
        "--out",
        out.to_str().unwrap(),
        "--dot",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("vertices=30"), "{s}");
    assert!(s.contains("expected connected=false"), "{s}");
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("30 "));
    assert!(fs::read_to_string(out.with_extension("dot"))
        .unwrap()
        .starts_with("graph"));
}

#[test]
fn gen_parity_det_expects_zero() {
    let o = commgraph(&["gen", "parity-det", "--n", "2", "--z", "0x0"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected det=0"));
}

#[test]
fn gen_random_is_reproducible() {
    let args = [
        "gen",
        "or-ip-euler",
        "--n",
        "3",
        "--random",
        "--seed",
        "7",
        "--dot",
    ];
    let a = commgraph(&args);
    let b = commgraph(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_rejects_bad_inputs() {
    assert_eq!(
        commgraph(&["gen", "ip-conn", "--n", "3", "--x", "0xzz", "--y", "0x1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        commgraph(&["gen", "ip-conn", "--n", "3", "--x", "0x5"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_exit_codes() {
    let o = commgraph(&["verify", "ip-match", "--n", "3", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("ip-match:overlap,3,64,0,0"), "{s}");
    assert!(s.contains("ip-match:disjoint,3,64,0,0"), "{s}");

    let o = commgraph(&["verify", "parity-conn", "--n", "8", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("parity-conn,8,256,0,0"));

    assert_eq!(
        commgraph(&["verify", "ip-conn", "--n", "30", "--exhaustive"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_writes_csv_file() {
    let csv = scratch("verify.csv");
    let o = commgraph(&[
        "verify",
        "det-ip",
        "--n",
        "2",
        "--samples",
        "50",
        "--seed",
        "3",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "kind,n,cases,mismatches,seed\ndet-ip,2,50,0,3\n"
    );
}

#[test]
fn run_connectivity_on_path() {
    let path = Graph::from_edges(16, (0..15).map(|i| (i, i + 1))).unwrap();
    let file = write_tmp("path16.el", &write_graph(&path));
    let o = commgraph(&[
        "run",
        "connectivity",
        "--graph",
        &file,
        "--split",
        "random",
        "--seed",
        "1",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "output=true bits=65 rounds=2");
}

#[test]
fn run_euler_on_triangle_with_transcript() {
    let file = write_tmp("tri.el", "3 3\n0 1\n0 2\n1 2\n");
    let dump = scratch("tri.transcript");
    let o = commgraph(&[
        "run",
        "euler-trivial",
        "--graph",
        &file,
        "--transcript",
        dump.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("output=true bits=4"));
    assert!(!fs::read_to_string(&dump).unwrap().is_empty());
}

#[test]
fn run_matching_matches_oracle() {
    let edges: Vec<(usize, usize)> = (0..8)
        .flat_map(|u| (0..8).map(move |v| (u, v)))
        .filter(|&(u, v)| (u * 5 + v * 3) % 7 < 2)
        .map(|(u, v)| (u, 8 + v))
        .collect();
    let g = Graph::from_edges(16, edges).unwrap();
    let left: Vec<usize> = (0..8).collect();
    let want = hopcroft_karp_max_matching(&g, &left)
        .unwrap()
        .matching
        .len();
    let file = write_tmp("bip.el", &write_graph(&g));
    let o = commgraph(&["run", "matching-hk", "--graph", &file, "--left", "0..7"]);
    assert!(o.status.success());
    assert!(
        stdout(&o).starts_with(&format!("output={want} ")),
        "{}",
        stdout(&o)
    );
}

#[test]
fn run_rejects_broken_input() {
    let file = write_tmp("bad.el", "3 2\n0 1\n");
    assert_eq!(
        commgraph(&["run", "connectivity", "--graph", &file])
            .status
            .code(),
        Some(1)
    );
    let file = write_tmp("odd.el", "3 3\n0 1\n0 2\n1 2\n");
    assert_eq!(
        commgraph(&["run", "matching-hk", "--graph", &file, "--left", "0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn bench_is_reproducible_without_timing() {
    let args = [
        "bench",
        "connectivity",
        "--sizes",
        "16,32",
        "--trials",
        "3",
        "--seed",
        "2",
        "--no-time",
    ];
    let a = commgraph(&args);
    let b = commgraph(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.starts_with("protocol,n,trial,seed,output,bits,rounds,ms\n"));
    assert!(s.contains("# slope="));
}

#[test]
fn bench_matching_reports_constant() {
    let out = scratch("hk.csv");
    let o = commgraph(&[
        "bench",
        "matching-hk",
        "--sizes",
        "16,32",
        "--trials",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("C="));
    assert!(fs::read_to_string(&out).unwrap().contains("# C="));
    assert_eq!(
        commgraph(&["bench", "triangle", "--sizes", "3"])
            .status
            .code(),
        Some(1)
    );
}
