use cuspidal::cli::{run, Outcome};
use serde_json::{json, Value};

fn cli(args: &str) -> Outcome {
    run(std::iter::once("cuspidal").chain(args.split_whitespace()))
}

fn json_of(args: &str) -> Value {
    let out = cli(&format!("{args} --json"));
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn semigroup_record() {
    assert_eq!(
        json_of("sg info --gens 5,7,8"),
        json!({"generators": [5, 7, 8], "gaps": [1, 2, 3, 4, 6, 9, 11], "genus": 7, "conductor": 12, "frobenius": 11})
    );
    assert_eq!(json_of("sg info --gens 1")["frobenius"], json!(-1));
    assert_eq!(json_of("sg info --gens 2,15")["gaps"], json!([1, 3, 5, 7, 9, 11, 13]));
}

#[test]
fn json_is_stable() {
    let a = cli("severi codim --gens 2,15 --profile 2,4,6,8 --json");
    let b = cli("severi codim --gens 2,15 --profile 2,4,6,8 --json");
    assert_eq!(a, b);
}

#[test]
fn rho_and_dyck() {
    assert_eq!(json_of("sg rho --gens 6,14,21 --element 42")["rho"], json!(1));
    assert_eq!(json_of("sg rho --gens 2,15 --element 4")["rho"], json!(5));
    assert_eq!(cli("sg rho --gens 5,7,8 --element 6").code, 1);
    let d = json_of("sg dyck --gens 2,15");
    assert_eq!(d["path"], json!("URURURURURURUR"));
    assert_eq!(d["columns"][1], json!({"member": 4, "squares_above": 5}));
    let text = cli("sg dyck --gens 2,15 --profile 2,4,6,8").stdout;
    assert!(text.contains("betti 4 (column 2): classes 2, phi 1, rho 5"));
}

#[test]
fn enumerate() {
    let out = cli("sg enumerate --genus 3");
    assert!(out.stdout.starts_with("4 semigroups of genus 3\n"));
    let all = json_of("sg enumerate --genus 1");
    assert_eq!(all, json!([{"generators": [2, 3], "gaps": [1], "genus": 1, "conductor": 2, "frobenius": 1}]));
    assert_eq!(cli("sg enumerate --genus 40").code, 1);
}

#[test]
fn betti() {
    assert_eq!(json_of("betti --ground 6,10,15 --bound 100")["betti"], json!([30]));
    assert_eq!(json_of("betti --ground 2,4,6,8 --bound 14")["betti"], json!([4, 6, 8]));
    let fib = json_of("betti --ground 2,4,6,8 --element 6");
    assert_eq!(fib["representatives"], json!([[0, 0, 1, 0], [1, 1, 0, 0]]));
    let fib = json_of("betti --ground 6,14,21 --element 42");
    assert_eq!(fib["factorizations"], json!([[0, 0, 2], [0, 3, 0], [7, 0, 0]]));
    assert_eq!(fib["classes"].as_array().unwrap().len(), 3);
}

#[test]
fn severi_codim() {
    let out = cli("severi codim --gens 2,15 --profile 2,4,6,8");
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("codimension = 21\n"), "{}", out.stdout);
    assert!(out.stdout.contains("betti 4: classes 2, M = [(-2,1,0,0)], phi 1, rho 5"));
    assert_eq!(json_of("severi codim --gens 6,10,15 --profile 6,10,15")["codimension"], json!(24));
    assert_eq!(json_of("severi codim --gens 6,14,21 --profile 6,14,21")["codimension"], json!(36));
    assert_eq!(json_of("severi codim --gens 4,6,7 --profile 4,6")["rstar"], json!([7]));
    assert_eq!(cli("severi codim --gens 5,7,8 --profile 5,6").code, 1);
    assert_eq!(cli("severi codim --gens 5,7,8 --profile 7,5").code, 1);
}

#[test]
fn severi_verifiers() {
    let ok = cli("severi verify-supersymmetric --a 4,5,7");
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.contains("codimension 92 closed form 92 ok"));
    assert_eq!(cli("severi verify-supersymmetric --max-product 100").code, 0);
    assert_eq!(cli("severi verify-supersymmetric --a 2,4,5").code, 1);
    let out = cli("severi verify-hyperelliptic --max-genus 10 --max-n 8 --json");
    let cells: Value = serde_json::from_str(&out.stdout).unwrap();
    for c in cells.as_array().unwrap() {
        let (g, n) = (c["genus"].as_u64().unwrap(), c["n"].as_u64().unwrap());
        assert_eq!(c["pass"], json!(n <= g), "g={g} n={n}");
    }
    // Cells with n > g do not reach (n - 1) g.
    assert_eq!(out.code, 2);
    assert_eq!(cli("severi verify-hyperelliptic --max-genus 2 --max-n 2").code, 2);
    assert_eq!(cli("severi verify-hyperelliptic --max-genus 3 --max-n 1").code, 0);
}

#[test]
fn compare_nodal() {
    let c = json_of("severi compare-nodal --a 4,5,7");
    assert_eq!((c["codimension"].clone(), c["genus"].clone(), c["below_nodal"].clone()), (json!(92), json!(99), json!(true)));
    assert_eq!(json_of("severi compare-nodal --a 2,3,5")["below_nodal"], json!(false));
    let h = json_of("severi compare-nodal --gens 2,15 --profile 2,4,6,8");
    assert_eq!(h["at_hyperelliptic_bound"], json!(true));
}

#[test]
fn lattice() {
    assert_eq!(
        json_of("lattice simplex --a 2,3,7"),
        json!({"a": [2, 3, 7], "bound": 1, "count": 1, "volume": "1/10584"})
    );
    assert_eq!(json_of("lattice simplex --a 4,5,7")["count"], json!(8));
    assert_eq!(json_of("lattice simplex --a 2,3,5")["volume"], json!("0/1"));
    assert_eq!(cli("lattice simplex --a 2,4,5").code, 1);
}

#[test]
fn curves() {
    let out = cli("curve gonality --exponents 0,5,7,8");
    assert_eq!(out.stdout, "gonality 4 realized at mu=2\n");
    assert_eq!(json_of("curve canonical --exponents 0,5,7,8"), json!([0, 2, 5, 7, 8, 9, 10]));
    assert_eq!(json_of("curve canonical --exponents 0,2,3"), json!([0]));
    assert_eq!(json_of("curve info --exponents 0,3,4,5,11")["genus"], json!(9));
    assert_eq!(json_of("curve gonality --exponents 0,2,3"), json!({"d": 2, "mu": [1, 2]}));
    for mu in 1..=4 {
        let d = json_of(&format!("curve sheaf --exponents 0,5,7,8 --mu {mu}"))["degree"].clone();
        assert_eq!(d, json!([5, 4, 5, 7][mu - 1]));
    }
    assert_eq!(json_of("curve sheaf --exponents 0,5,7,8 --mu 2")["outside"], json!([2, 9]));
    let s = json_of("curve scroll --set 0,2,5,7,8,9,10");
    assert_eq!((s["fold"].clone(), s["mu"].clone()), (json!(3), json!(2)));
    assert_eq!(
        cli("curve scroll --exponents 0,5,7,8").stdout,
        "3-fold scroll, mu=2: {0,2} {5,7,9} {8,10}\n"
    );
    assert_eq!(json_of("curve scroll --set 0,1,2,3")["fold"], json!(1));
    assert_eq!(json_of("curve consistency --exponents 0,5,7,8")["consistent"], json!(true));
    assert_eq!(cli("curve consistency --exponents 0,3,4,5").code, 1);
    assert_eq!(cli("curve canonical --exponents 0,1").code, 1);
    assert_eq!(cli("curve gonality --exponents 0,4,6,7,9").code, 1);
    assert_eq!(cli("curve info --exponents 0,2,4").code, 1);
}

#[test]
fn noether_and_kunz() {
    assert_eq!(json_of("verify kunz --gens 5,7,8")["k_below_c"], json!([0, 2, 5, 7, 8, 9, 10]));
    let out = cli("verify max-noether --gens 5,7,8 --json");
    assert_eq!(out.code, 2);
    let reports: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(reports[0]["entries"][0], json!({"n": 12, "witness": [2, 10]}));
    assert_eq!(cli("verify max-noether --gens 2,3").code, 0);
    let c = json_of("verify covering --genus 4 --m 2 --k 2");
    assert_eq!(c, json!({"counts": {"variables": 6, "equations": 6, "heuristic_solvable": false}, "bound": 3}));
    assert_eq!(cli("verify covering --genus 4 --m 3 --k 2").code, 1);
}

#[test]
fn usage() {
    assert_eq!(cli("frobnicate").code, 64);
    assert_eq!(cli("sg").code, 64);
    assert_eq!(cli("sg info").code, 64);
    assert_eq!(cli("sg info --gens x").code, 64);
    assert_eq!(cli("--version").code, 0);
    let out = cli("sg info --gens 4,6");
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
}
