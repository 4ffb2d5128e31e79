use scrollar_cli::report::parse_csv;
use scrollar_cli::{run_args, Cell, Outcome, Report, EXIT_CONSISTENCY, EXIT_OK, EXIT_VALIDATION};
use scrollar_core::tableaux::factorial;

fn scrolls(args: &str) -> Outcome {
    run_args(std::iter::once("scrolls").chain(args.split_whitespace()))
}

fn json(args: &str) -> Report {
    let out = scrolls(&format!("{args} --format json"));
    assert_eq!(out.code, EXIT_OK, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid report json")
}

fn field(r: &Report, table: &str, name: &str) -> Cell {
    let t = r.table(table).unwrap_or_else(|| panic!("no table {table}"));
    t.rows.iter().find(|row| row[0] == Cell::text(name)).unwrap_or_else(|| panic!("no field {name}"))[1].clone()
}

#[test]
fn hook_invariants_for_a_tetragonal_profile() {
    let r = json("scrollar hooks --d 4 --g 2 --e 1,2,2 --i 2");
    assert_eq!(field(&r, "invariants", "values"), Cell::text("3,3,4"));
    assert_eq!(field(&r, "invariants", "sum"), Cell::Int(10));
}

#[test]
fn character_value_and_p() {
    let r = json("char --d 6 --lambda 2,2,2 --class 2,1,1,1,1");
    assert_eq!(field(&r, "character", "value"), Cell::Int(-1));
    assert_eq!(field(&r, "character", "p"), Cell::Int(3));
    assert_eq!(field(&r, "character", "dimension"), Cell::Int(5));
}

#[test]
fn addendum_for_d4_has_one_row_per_pattern() {
    let r = json("addendum --d 4 --subgroup D4");
    assert_eq!(r.table("addendum").unwrap().rows.len(), 5);
    let nested = json("ramify addendum --d 4 --subgroup D4");
    assert_eq!(r.tables, nested.tables);
    assert!(r.table("discrepancies").is_none_or(|t| t.rows.is_empty()));
}

#[test]
fn addendum_discrepancies_are_reported() {
    let r = json("addendum --d 6 --subgroup S5prime");
    let diffs = r.table("discrepancies").expect("reference exists for S5prime");
    assert_eq!(diffs.rows.len(), 1);
    assert_eq!(diffs.rows[0][3], Cell::text("t^9"));
}

#[test]
fn validation_errors_exit_with_two() {
    for args in [
        "char --d 5 --lambda 2,2 --class 1,1,1,1,1",
        "scrollar hooks --d 4 --g 2 --e 1,1,9 --i 1",
        "scrollar hooks --d 4 --g 2 --e 1,1 --i 1",
        "group --d 4 --subgroup Nonsense",
        "localmodel disc --e 6",
        "frobnicate",
    ] {
        let out = scrolls(args);
        assert_eq!(out.code, EXIT_VALIDATION, "{args}");
        assert!(out.stdout.is_empty(), "{args}");
        assert!(!out.stderr.is_empty(), "{args}");
    }
}

#[test]
fn maroni_validation_can_be_skipped() {
    // e_3 = 6 exceeds (2g + 2)/4 = 3.5 at g = 6.
    let strict = scrolls("scrollar hooks --d 4 --g 6 --e 1,2,6 --i 1");
    assert_eq!(strict.code, EXIT_VALIDATION);
    let r = json("scrollar hooks --d 4 --g 6 --e 1,2,6 --i 1 --skip-maroni-validation");
    assert!(r.table("warnings").is_some());
}

#[test]
fn consistency_failures_exit_with_three() {
    // The transpositions of S4 generate S4, so a branch pattern claiming only
    // 3-cycles cannot have Galois group S4 and the generation check fails.
    let out = scrolls("ramify analyze --d 4 --g 0 --e 1,1,1 --subgroup D4 --branch 3,1*3 --galois S4");
    assert_eq!(out.code, EXIT_CONSISTENCY, "{}", out.stderr);
}

#[test]
fn json_round_trips() {
    for args in [
        "partitions --d 6",
        "chartable --d 5",
        "group --d 5 --subgroup AGL1F5",
        "scrollar resolvent --d 4 --g 2 --e 1,2,2 --subgroup D4",
        "scrollar bounds --d 6 --g 10",
        "localmodel disc --e 3",
    ] {
        let r = json(args);
        let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(r, again, "{args}");
    }
}

#[test]
fn csv_matches_json() {
    for args in [
        "partitions --d 5",
        "chartable --d 4",
        "addendum --d 6 --subgroup S5prime",
        "group --d 4 --subgroup D4",
        "localmodel specht --shape 2,1 --S 2 --T 1 --check",
    ] {
        let r = json(args);
        let out = scrolls(&format!("{args} --format csv"));
        assert_eq!(out.code, EXIT_OK);
        let tables = parse_csv(&out.stdout);
        assert_eq!(tables.len(), r.tables.len(), "{args}");
        for ((name, header, rows), t) in tables.iter().zip(&r.tables) {
            assert_eq!(name, &t.name);
            assert_eq!(header, &t.columns);
            let expected: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
            assert_eq!(rows, &expected, "{args} / {name}");
        }
    }
}

#[test]
fn markdown_is_the_default() {
    let out = scrolls("partitions --d 3");
    assert!(out.stdout.starts_with("# partitions"));
    assert!(out.stdout.contains("| 2,1 | 2 | 1 | 2,1 | true |"));
}

#[test]
fn large_integers_become_strings() {
    assert_eq!(Cell::from(factorial(20)), Cell::text("2432902008176640000"));
    assert_eq!(Cell::from(1u64 << 53), Cell::text("9007199254740992"));
    assert_eq!(Cell::from((1u64 << 53) - 1), Cell::Int(9007199254740991));
    assert_eq!(Cell::from(-(1i64 << 60)), Cell::text("-1152921504606846976"));
}

#[test]
fn local_model_respects_the_bound() {
    let out = scrolls("localmodel trace --e 4 --monomial 0,1,2,3 --e-bound 3");
    assert_eq!(out.code, EXIT_VALIDATION);
    let r = json("localmodel trace --e 2 --monomial 1,1");
    let t = r.table("trace").unwrap();
    assert_eq!(t.rows, vec![vec![Cell::Int(1), Cell::text("-2/1")]]);
}

#[test]
fn specht_polynomial_for_small_shape() {
    let r = json("localmodel specht --shape 2,1 --S 2 --T 1");
    assert_eq!(field(&r, "specht", "polynomial"), Cell::text("x_2 x_3 - x_1 x_2"));
    assert_eq!(scrolls("localmodel specht --shape 2,1 --S 3 --T 1").code, EXIT_VALIDATION);
}
