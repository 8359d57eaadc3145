//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact.

mod common;

use std::io::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use serde_json::Value;

use common::*;
use semicross::exactlin::Subspace;
use semicross::field::Rationals;
use semicross::gorenstein::{check_gorenstein, gorenstein_transfer_check, GorensteinVerdict};
use semicross::koszul::{
    check_koszul, contraction, global_dimension, koszul_complex, poincare_identity_check, verify_twist_iso,
    GlobalDimension,
};
use semicross::presentation::Presentation;
use semicross::samples::{braid, cubic, free, gens, poly_vec, polynomial, swap_matrix, word_vec};
use semicross::tensorspace::TensorAlgebra;
use semicross::twist::{semi_cross, theta_split_holds};

const SEED: u64 = 0x5eed_c0de;
const BRAID_FILE: &str = "field Q\ngens x y\nrel x*y*x - y*x*y\naut x -> y, y -> x\n";
const CUBIC_FILE: &str = "field Q\ngens x y\nrel x*x*x - y*y*y\n";
const POLY_FILE: &str = "field Q\ngens x y\nrel x*y - y*x\n";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs the command-line tool on `contents` and returns exit code, stdout.
fn run_cli(args: &[&str], contents: &str) -> (i32, String) {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(contents.as_bytes()).expect("write temp file");
    let out = Command::new(env!("CARGO_BIN_EXE_semicross"))
        .args(args)
        .arg(file.path())
        .output()
        .expect("run semicross");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn run_cli_json(args: &[&str], contents: &str) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, out) = run_cli(&all, contents);
    (code, serde_json::from_str(&out).expect("JSON report"))
}

fn braid_swap() -> (
    Presentation<Rationals>,
    semicross::presentation::GradedAutomorphism<Rationals>,
) {
    let b = braid();
    let alpha = b
        .validate_automorphism(swap_matrix())
        .expect("swap preserves the braid relation");
    (b, alpha)
}

fn semi_cross_exactness() -> Outcome {
    let (b, alpha) = braid_swap();
    let out = semi_cross(&b, &alpha).map_err(|e| e.to_string())?;
    let expected = Subspace::span(&Rationals, 8, vec![poly_vec(2, &[(1, &[0, 0, 0]), (-1, &[1, 1, 1])])]);
    ensure(
        out.relations().space == expected,
        "relations differ from span(xxx - yyy)",
    )?;
    let (code, text) = run_cli(&["semicross"], BRAID_FILE);
    ensure(code == 0, format!("semicross exited with {code}"))?;
    ensure(
        text.contains("rel x*x*x - y*y*y\n"),
        format!("unexpected output:\n{text}"),
    )?;
    Ok("relation space = span(x*x*x - y*y*y)".into())
}

fn roundtrip() -> Outcome {
    let (b, alpha) = braid_swap();
    let there = semi_cross(&b, &alpha).map_err(|e| e.to_string())?;
    let back = semi_cross(&there, &alpha.inverse()).map_err(|e| e.to_string())?;
    ensure(back.relations() == b.relations(), "braid/swap does not return")?;
    let mut r = rng(SEED);
    for k in 0..20 {
        let (p, a) = random_valid_pair(&mut r);
        let there = semi_cross(&p, &a).map_err(|e| e.to_string())?;
        let back = semi_cross(&there, &a.inverse()).map_err(|e| e.to_string())?;
        ensure(
            back.relations() == p.relations(),
            format!("random instance {k} does not return"),
        )?;
    }
    Ok("braid/swap and 20 random instances return exactly".into())
}

fn splitting_identity() -> Outcome {
    let mut r = rng(SEED + 3);
    let t = TensorAlgebra::new(2);
    for k in 0..20 {
        let g = random_invertible(&mut r, 2);
        for n in 1..=6 {
            ensure(
                theta_split_holds(&t, &g, n).map_err(|e| e.to_string())?,
                format!("automorphism {k} fails at n = {n}"),
            )?;
        }
    }
    Ok("20 automorphisms, all splits p < n <= 6".into())
}

fn koszulity() -> Outcome {
    let (b, alpha) = braid_swap();
    let sc = semi_cross(&b, &alpha).map_err(|e| e.to_string())?;
    for (name, p) in [("braid", &b), ("semi-cross", &sc)] {
        let k = check_koszul(p, 9).map_err(|e| e.to_string())?;
        ensure(k.is_koszul(), format!("{name}: {:?}", k.verdict))?;
        ensure(
            k.table.iter().flatten().all(|&h| h == 0),
            format!("{name}: nonzero homology"),
        )?;
    }
    let (code, json) = run_cli_json(&["koszul", "--max-degree", "9"], BRAID_FILE);
    ensure(
        code == 0 && json["koszul"]["verdict"] == "koszul-up-to-9",
        format!("cli: exit {code}, {}", json["koszul"]["verdict"]),
    )?;

    let mut tested = vec![b.clone(), sc, cubic(), polynomial(), free(2, 2), free(3, 3)];
    let mut r = rng(SEED + 4);
    for _ in 0..20 {
        tested.push(random_presentation(&mut r).0);
    }
    for (k, p) in tested.iter().enumerate() {
        let c = contraction(p, 6).map_err(|e| e.to_string())?;
        for slice in &c.slices {
            ensure(
                slice.homology_at(1) == 0,
                format!("presentation {k} not exact at q = 1 in degree {}", slice.degree),
            )?;
        }
    }
    Ok(format!(
        "koszul-up-to-9 for both; H_1 = 0 for {} presentations",
        tested.len()
    ))
}

fn global_dimensions() -> Outcome {
    for (name, p) in [("braid", braid()), ("cubic", cubic())] {
        ensure(
            p.dual_component(4).map_err(|e| e.to_string())?.is_zero(),
            format!("{name}: A^!*_4 != 0"),
        )?;
        ensure(
            !p.dual_component(3).map_err(|e| e.to_string())?.is_zero(),
            format!("{name}: A^!*_3 = 0"),
        )?;
        let g = global_dimension(&p).map_err(|e| e.to_string())?;
        ensure(
            g == GlobalDimension::Finite { value: 2, vanishing: 4 },
            format!("{name}: {g:?}"),
        )?;
    }
    let f = global_dimension(&free(2, 2)).map_err(|e| e.to_string())?;
    ensure(f.finite() == Some(1), format!("free: {f:?}"))?;
    let k = global_dimension(&polynomial()).map_err(|e| e.to_string())?;
    ensure(k.finite() == Some(2), format!("k[x,y]: {k:?}"))?;
    Ok("braid 2, x^3 - y^3 2, free 1, k[x,y] 2".into())
}

fn hilbert_series() -> Outcome {
    let expected = vec![1usize, 2, 4, 7, 12, 20, 33, 54, 88];
    let mut recurrence = vec![1i64, 2, 4];
    for n in 3..=8 {
        recurrence.push(2 * recurrence[n - 1] - recurrence[n - 3]);
    }
    ensure(
        recurrence.iter().map(|&x| x as usize).collect::<Vec<_>>() == expected,
        "recurrence",
    )?;
    let rels = [
        ("braid", vec![(q(1), vec![0, 1, 0]), (q(-1), vec![1, 0, 1])]),
        ("cubic", vec![(q(1), vec![0, 0, 0]), (q(-1), vec![1, 1, 1])]),
    ];
    for (name, rel) in rels {
        let p = presentation(2, 3, std::slice::from_ref(&rel));
        let dims = p.hilbert_series(8).map_err(|e| e.to_string())?;
        ensure(dims == expected, format!("{name}: {dims:?}"))?;
        let oracle: Vec<usize> = (0..=8)
            .map(|n| oracle_dim(2, 3, std::slice::from_ref(&rel), n))
            .collect();
        ensure(oracle == expected, format!("{name} oracle: {oracle:?}"))?;
        let c = poincare_identity_check(&p, 8).map_err(|e| e.to_string())?;
        ensure(
            c.dual_poly == vec![1, -2, 0, 1, 0, 0, 0, 0, 0],
            format!("{name}: dual {:?}", c.dual_poly),
        )?;
        ensure(
            c.residual.iter().all(|&x| x == 0),
            format!("{name}: residual {:?}", c.residual),
        )?;
    }
    let (code, json) = run_cli_json(&["poincare", "--max-degree", "8"], BRAID_FILE);
    ensure(code == 0, format!("poincare exited with {code}"))?;
    ensure(
        json["poincare"]["dual_poly"] == serde_json::json!([1, -2, 0, 1, 0, 0, 0, 0, 0]),
        "cli dual poly",
    )?;
    ensure(
        json["poincare"]["residual"] == serde_json::json!([0, 0, 0, 0, 0, 0, 0, 0, 0]),
        "cli residual",
    )?;
    Ok("[1,2,4,7,12,20,33,54,88]; dual polynomial 1 - 2t + t^3, residual 0 through t^8".into())
}

fn twist_isomorphism() -> Outcome {
    let (b, alpha) = braid_swap();
    let r = verify_twist_iso(&b, &alpha, 8).map_err(|e| e.to_string())?;
    ensure(r.passed(), format!("{r:?}"))?;
    ensure(
        r.bidegrees_checked == 36,
        format!("checked {} bidegrees", r.bidegrees_checked),
    )?;
    let (code, json) = run_cli_json(&["twist-iso", "--max-degree", "8"], BRAID_FILE);
    ensure(code == 0, format!("twist-iso exited with {code}"))?;
    ensure(json["twist"]["iso_check"]["passed"] == true, "cli reports failure")?;
    Ok(format!(
        "K(theta) invertible and a chain map at {} bidegrees",
        r.bidegrees_checked
    ))
}

fn nilpotency() -> Outcome {
    let mut tested = vec![
        ("braid".to_string(), braid()),
        ("cubic".to_string(), cubic()),
        ("k[x,y]".to_string(), polynomial()),
        ("free".to_string(), free(2, 2)),
    ];
    let mut r = rng(SEED + 8);
    for k in 0..20 {
        tested.push((format!("random {k}"), random_presentation(&mut r).0));
    }
    let mut bidegrees = 0;
    for (name, p) in &tested {
        let k = koszul_complex(p, 6).map_err(|e| e.to_string())?;
        let fails = k.nilpotency_failures().map_err(|e| e.to_string())?;
        ensure(fails.is_empty(), format!("{name}: d^N != 0 at {fails:?}"))?;
        bidegrees += k.bidegrees().count();
        let c = semicross::koszul::contract(&k).map_err(|e| e.to_string())?;
        for slice in &c.slices {
            let fails = slice.composite_failures().map_err(|e| e.to_string())?;
            ensure(
                fails.is_empty(),
                format!("{name}: composite nonzero in degree {} at {fails:?}", slice.degree),
            )?;
        }
    }
    Ok(format!("{} presentations, {bidegrees} bidegrees", tested.len()))
}

fn gorenstein() -> Outcome {
    let c = check_gorenstein(&cubic(), 8).map_err(|e| e.to_string())?;
    ensure(
        c.verdict == GorensteinVerdict::NotGorenstein,
        format!("cubic: {:?}", c.verdict),
    )?;
    // x^3 - y^3 has no relations in degree 2, so A_2 = E⊗E
    let cokernel = 4 - oracle_rank(vec![word_vec(2, &[0, 0]), word_vec(2, &[1, 1])]);
    let witness = c
        .witnesses
        .iter()
        .find(|e| e.hom_degree == 2 && e.weight == -1)
        .ok_or("no H^2 witness with values in A_2")?;
    ensure(
        witness.dim == Some(cokernel) && cokernel == 2,
        format!("witness {witness:?}, oracle {cokernel}"),
    )?;

    let (code, json) = run_cli_json(&["gorenstein", "--max-degree", "8"], CUBIC_FILE);
    ensure(code == 1, format!("cli exit {code}"))?;
    ensure(json["gorenstein"]["verdict"] == "not-gorenstein", "cli verdict")?;
    ensure(!json["gorenstein"]["witness"].is_null(), "cli prints no witness")?;

    let b = check_gorenstein(&braid(), 8).map_err(|e| e.to_string())?;
    ensure(
        b.verdict == GorensteinVerdict::NotGorenstein,
        format!("braid: {:?}", b.verdict),
    )?;
    let (bp, alpha) = braid_swap();
    ensure(
        gorenstein_transfer_check(&bp, &alpha, 8).map_err(|e| e.to_string())?,
        "tables of braid and cubic differ",
    )?;
    ensure(b.table == c.table, "tables of braid and cubic differ")?;

    let k = check_gorenstein(&polynomial(), 8).map_err(|e| e.to_string())?;
    ensure(k.is_gorenstein(), format!("k[x,y]: {:?}", k.verdict))?;
    ensure(
        k.table
            .iter()
            .filter(|e| e.hom_degree < 2)
            .all(|e| e.dim.unwrap_or(0) == 0),
        "k[x,y]: nonzero H^0 or H^1",
    )?;
    ensure(k.top_total == 1, format!("k[x,y]: total H^2 = {}", k.top_total))?;
    let (code, _) = run_cli(&["gorenstein", "--max-degree", "8"], POLY_FILE);
    ensure(code == 0, format!("k[x,y] cli exit {code}"))?;
    Ok("x^3 - y^3 not Gorenstein (H^2 = 2 with values in A_2); braid agrees; k[x,y] consistent".into())
}

fn regularity() -> Outcome {
    let c = cubic();
    for s in 0..2 {
        let g = c.generator(s).map_err(|e| e.to_string())?;
        let r = c.is_right_regular(&g, 8).map_err(|e| e.to_string())?;
        ensure(r.is_regular(), format!("generator {s}: {:?}", r.kernel_dims))?;
    }
    let nil =
        Presentation::from_vectors(Rationals, gens(1), 2, vec![word_vec(1, &[0, 0])]).map_err(|e| e.to_string())?;
    let x = nil.generator(0).map_err(|e| e.to_string())?;
    let r = nil.is_right_regular(&x, 8).map_err(|e| e.to_string())?;
    ensure(r.first_failure() == Some(1), format!("A(kx, x*x): {:?}", r.kernel_dims))?;
    let (code, json) = run_cli_json(&["regular", "--element", "y", "--max-degree", "8"], CUBIC_FILE);
    ensure(
        code == 0 && json["regular"]["verdict"] == "regular-up-to-8",
        format!("cli exit {code}"),
    )?;
    Ok("x, y right-regular through 8; A(kx, x*x) fails at degree 1".into())
}

fn oracle_equivalence() -> Outcome {
    let mut r = rng(SEED + 11);
    let mut checked = 0;
    for k in 0..20 {
        let (d, big_n, rels) = random_relations(&mut r);
        let p = presentation(d, big_n, &rels);
        for n in 0..=5 {
            let lib = p.dim(n).map_err(|e| e.to_string())?;
            let oracle = oracle_dim(d, big_n, &rels, n);
            ensure(lib == oracle, format!("instance {k}, degree {n}: {lib} vs {oracle}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} components agree with word enumeration"))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("semi-cross exactness", semi_cross_exactness),
        ("semi-cross roundtrip", roundtrip),
        ("theta splitting identity", splitting_identity),
        ("koszulity", koszulity),
        ("global dimension", global_dimensions),
        ("hilbert series and poincare identity", hilbert_series),
        ("twist isomorphism", twist_isomorphism),
        ("N-complex and contraction", nilpotency),
        ("gorenstein verdicts", gorenstein),
        ("regularity", regularity),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
