use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use csfkit::fixtures;
use csfkit::graph::{canonical_tree_code, Graph};
use csfkit::treedata::theta_tables;
use tempfile::TempDir;

fn csfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csfkit"))
        .args(args)
        .env_remove("CSFKIT_MAX_EDGES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn put_graph(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    put(dir, name, &g.to_edge_list())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn csf_of_small_complete_graphs() {
    let dir = TempDir::new().unwrap();
    let k2 = put(&dir, "k2.txt", "2 1\n0 1\n");
    let k3 = put(&dir, "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    let o = csfkit(&["csf", s(&k2), "--poly"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "csf n=2\n2 -1\n1,1 1\n");
    let o = csfkit(&["csf", s(&k3)]);
    assert_eq!(stdout(&o), "csf n=3\n3 2\n2,1 -3\n1,1,1 1\n");
}

#[test]
fn chromatic_value_of_seven_vertex_tree() {
    let dir = TempDir::new().unwrap();
    let t = put_graph(&dir, "t.txt", &fixtures::seven_vertex_tree());
    let o = csfkit(&["csf", s(&t), "--chromatic", "3"]);
    assert_eq!(stdout(&o), "192\n");
}

#[test]
fn report_lists_invariants() {
    let dir = TempDir::new().unwrap();
    let k3 = put(&dir, "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    let o = csfkit(&["csf", s(&k3), "--report"]);
    let text = stdout(&o);
    assert!(text.contains("edges 3\n"));
    assert!(text.contains("triangles 1\n"));
    assert!(text.contains("sum_squared_degrees 12\n"));
}

#[test]
fn equal_and_differ() {
    let dir = TempDir::new().unwrap();
    let l = put_graph(&dir, "l.txt", &fixtures::unicyclic_left());
    let r = put_graph(&dir, "r.txt", &fixtures::unicyclic_right());
    let o = csfkit(&["equal", s(&l), s(&r)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "EQUAL\n");
    assert_eq!(csfkit(&["equal", s(&l), s(&l)]).status.code(), Some(0));

    let (a, b) = fixtures::near_miss_pair();
    let a = put_graph(&dir, "a.txt", &a);
    let b = put_graph(&dir, "b.txt", &b);
    let o = csfkit(&["equal", s(&a), s(&b)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "DIFFER at 8,5,1,1: -9 vs -8\n");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = put(&dir, "bad.txt", "3 1\n0 0\n");
    let o = csfkit(&["csf", s(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("bad.txt: line 2"));
    assert_eq!(csfkit(&["csf", "/nonexistent/file"]).status.code(), Some(3));
    assert_eq!(csfkit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(csfkit(&["csf"]).status.code(), Some(2));

    let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
    let k5 = put_graph(&dir, "k5.txt", &k5);
    let o = csfkit(&["--max-edges", "9", "csf", s(&k5)]);
    assert_eq!(o.status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_csfkit"))
        .args(["csf", s(&k5)])
        .env("CSFKIT_MAX_EDGES", "9")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(csfkit(&["--max-edges", "10", "csf", s(&k5)]).status.code(), Some(0));
}

#[test]
fn decompose_round_trips_through_combination() {
    let dir = TempDir::new().unwrap();
    let (g, [a, b, c]) = fixtures::labelled_triangle_top();
    let gp = put_graph(&dir, "g.txt", &g);
    let out = dir.path().join("terms");
    let edges = format!("{a},{b},{c}");
    let o = csfkit(&["decompose", s(&gp), "--rule", "triangle", "--edges", &edges, "--out-dir", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 3);
    let direct = stdout(&csfkit(&["csf", s(&gp)]));
    let summed = csfkit(&["csf", "--combination", s(&out.join("combination.txt"))]);
    assert_eq!(stdout(&summed), direct);

    let o = csfkit(&["decompose", s(&gp), "--rule", "triangle", "--edges", &edges, "--reduce"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("term "));

    let o = csfkit(&["decompose", s(&gp), "--rule", "path", "--edges", &edges]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn make_pair_writes_equal_graphs() {
    let dir = TempDir::new().unwrap();
    let point = put(&dir, "point.txt", "1 0\n");
    let edge = put(&dir, "edge.txt", "2 1\n0 1\n");
    let prefix = dir.path().join("out");
    let o = csfkit(&["make-pair", s(&point), "0", s(&edge), "1", "--out", s(&prefix)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let sum = text.lines().last().unwrap();
    assert!(sum.starts_with("sha256 ") && sum.len() == 7 + 64);
    let h = format!("{}_h.txt", s(&prefix));
    let j = format!("{}_j.txt", s(&prefix));
    assert_eq!(csfkit(&["equal", &h, &j]).status.code(), Some(0));

    let l = put_graph(&dir, "l.txt", &fixtures::unicyclic_left());
    let left = stdout(&csfkit(&["csf", s(&l)]));
    assert_eq!(stdout(&csfkit(&["csf", &h])), left);

    let again = csfkit(&["make-pair", s(&point), "0", s(&edge), "1", "--out", s(&prefix)]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn theta_then_reconstruct() {
    let dir = TempDir::new().unwrap();
    let star = put(&dir, "star.txt", "5 4\n0 1\n0 2\n0 3\n0 4\n");
    let o = csfkit(&["theta", s(&star)]);
    assert!(o.status.success());
    let table = put(&dir, "star.theta", &stdout(&o));
    let o = csfkit(&["reconstruct", s(&table)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stderr(&o), "CONSISTENT\n");
    let tree = Graph::parse(&stdout(&o)).unwrap();
    let expected = Graph::parse(&fs::read_to_string(&star).unwrap()).unwrap();
    assert_eq!(canonical_tree_code(&tree).unwrap(), canonical_tree_code(&expected).unwrap());
}

#[test]
fn reconstruct_worked_example_from_pairs() {
    let dir = TempDir::new().unwrap();
    let table = put(&dir, "ex.theta", &fixtures::theta_example_pairs().to_text());
    let out = dir.path().join("tree.txt");
    let o = csfkit(&["reconstruct", s(&table), "--pairs-only", "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "CONSISTENT\n");
    let tree = Graph::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(tree.vertex_count(), 13);
    assert_eq!(theta_tables(&tree).unwrap().pairs_only(), fixtures::theta_example_pairs());
}

#[test]
fn reconstruct_rejects_two_centroids() {
    let dir = TempDir::new().unwrap();
    let table = put(&dir, "two.theta", &fixtures::two_centroid_pairs().to_text());
    let o = csfkit(&["reconstruct", s(&table), "--pairs-only"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("two centroids"));
}

#[test]
fn search_reports() {
    let o = csfkit(&["search", "4", "--class", "tree"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "search n=4 class=tree graphs=2 groups=0\n");
    assert!(stderr(&o).starts_with("elapsed "));

    let o = csfkit(&["search", "6", "--class", "unicyclic"]);
    assert!(stdout(&o).lines().next().unwrap().starts_with("search n=6 class=unicyclic graphs=13 groups="));
    assert!(stdout(&o).contains("group 1\n"));

    assert_eq!(csfkit(&["search", "11", "--class", "unicyclic"]).status.code(), Some(4));
}
