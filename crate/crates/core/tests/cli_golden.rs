//! CLI output compared against files in `tests/golden`.
//! Run with `NIKULIN_BLESS=1` to rewrite them.

use std::path::PathBuf;

use nikulin::cli::run;

const CASES: &[(&str, &str, i32)] = &[
    ("picx", "table picx --d 1..8", 0),
    ("modelsx", "table modelsx --d 1..8", 0),
    ("nsy", "table nsy --d 1..8", 2),
    ("nsy_j3", "table nsy --d 1..12 --variant j3", 0),
    ("projy", "table projy --d 1..10", 0),
    ("projy_json", "table projy --d 1..2 --json", 0),
    ("disc_e8m2", "lattice disc --name E8(-2)", 0),
    ("disc_lambda_tilde", "lattice disc --name LambdaTilde_4", 0),
    ("sig_h2y", "lattice sig --name H2Y", 0),
    ("chi_orbifold", "chi --orbifold --d 3 --k -1 --N 0", 0),
    ("chi_weil", "chi --weil --qL 12 --m 1 --N 28", 0),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("NIKULIN_BLESS").is_some();
    let mut mismatches = Vec::new();
    for &(name, args, code) in CASES {
        let argv = std::iter::once("nikulin").chain(args.split_whitespace());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let got = run(argv, &mut out, &mut err);
        assert_eq!(got, code, "{args}: exit code, stderr {}", String::from_utf8_lossy(&err));
        let text = String::from_utf8(out).unwrap();
        let path = golden_path(name);
        if bless {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if want != text {
            mismatches.push(format!("{args}\n--- expected\n{want}--- got\n{text}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}
