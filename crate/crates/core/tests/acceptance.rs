//! One line per acceptance criterion. Every identity is checked exactly;
//! sampled checks use 20 points, series go to order 6, quantum modes to
//! |a| ≤ 4 and the Yang-Baxter check uses 5 triples.

use std::process::{Command, ExitCode};
use std::time::Instant;

use gtskew::exactmath::{int, is_squarefree, rat};
use gtskew::gl11::{self, semisimplicity, tensor_rep, verify_rtt, Gl11ModuleSpec};
use gtskew::qaffine::{self, QVerifyOptions};
use gtskew::tableaux::{enumerate_ssyt, enumerate_tableaux, shapes_up_to, SkewShape};
use gtskew::yangian::{self, VerifyOptions};
use gtskew::Report;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn tested_shapes() -> Vec<SkewShape> {
    let mut v = Vec::new();
    for (m, n, r) in [(1, 1, 0), (1, 1, 1), (2, 1, 0), (1, 2, 0), (2, 1, 1), (2, 0, 0), (0, 2, 0), (0, 2, 1)] {
        let max = if m + n + r >= 4 { 2 } else { 3 };
        v.extend(shapes_up_to(m, n, r, max));
    }
    v.push(SkewShape::straight(1, 2, vec![2, 1, 0]).unwrap());
    v.retain(|s| !enumerate_tableaux(s).is_empty());
    v
}

fn gl11_fixtures() -> Vec<Gl11ModuleSpec> {
    let pool = [
        (int(1), int(0)),
        (int(3), int(0)),
        (int(-1), int(0)),
        (int(2), int(1)),
        (rat(1, 2), int(2)),
        (int(2), rat(-1, 3)),
        (int(0), int(2)),
    ];
    let mut out = vec![];
    for k in 1..=3usize {
        let mut idx = vec![0usize; k];
        loop {
            if let Ok(s) = Gl11ModuleSpec::new(idx.iter().map(|&i| pool[i].clone()).collect()) {
                out.push(s);
            }
            let Some(p) = (0..k).find(|&p| idx[p] + 1 < pool.len()) else { break };
            idx[p] += 1;
            idx[..p].fill(0);
        }
    }
    let (small, large): (Vec<_>, Vec<_>) = out.into_iter().partition(|s| s.k() <= 2);
    small.into_iter().chain(large.into_iter().step_by(7)).collect()
}

fn require(report: &Report, what: &str) -> Result<(), String> {
    match report.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} ({})", c.name, c.detail.clone().unwrap_or_default())),
    }
}

fn gt_count() -> Outcome {
    let mut shapes = 0;
    for (m, n, r) in [(1, 1, 0), (1, 1, 1), (2, 1, 0), (1, 2, 0), (2, 1, 1), (2, 2, 0)] {
        for s in shapes_up_to(m, n, r, 6) {
            let (gt, ssyt) = (enumerate_tableaux(&s).len(), enumerate_ssyt(&s).len());
            if gt != ssyt {
                return Err(format!("{s:?}: {gt} GT tableaux, {ssyt} SSYT"));
            }
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes, |λ| ≤ 6"))
}

fn oracle_equivalence() -> Outcome {
    let mut shapes = 0;
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        for s in shapes_up_to(m, n, 0, 4) {
            let ours = yangian::build_current_rep(&s).map_err(|e| format!("{s:?}: {e}"))?;
            let oracle = yangian::evaluation_currents(&s).map_err(|e| format!("{s:?}: {e}"))?;
            if ours.basis != oracle.basis
                || ours.d != oracle.d
                || ours.x_plus != oracle.x_plus
                || ours.x_minus != oracle.x_minus
            {
                return Err(format!("{s:?}: closed formulas differ from the Gauss decomposition"));
            }
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes, exact equality"))
}

fn relation_suites() -> Outcome {
    let opts = VerifyOptions {
        samples: 20,
        order: 6,
        seed: 0x5eed,
    };
    let fixtures = gl11_fixtures();
    for spec in &fixtures {
        let rep = tensor_rep(spec).map_err(|e| e.to_string())?;
        for r in [rep.clone(), rep.flipped()] {
            require(&verify_rtt(&r, &opts).map_err(|e| e.to_string())?, &format!("RTT {spec:?}"))?;
        }
    }
    let shapes = tested_shapes();
    for s in &shapes {
        let rep = yangian::build_current_rep(s).map_err(|e| e.to_string())?;
        require(&yangian::verify_drinfeld_relations(&rep, &opts).map_err(|e| e.to_string())?, &format!("{s:?}"))?;
        let (central, value) = yangian::verify_central_series(&rep, 6).map_err(|e| e.to_string())?;
        require(&central, &format!("{s:?}"))?;
        if value.is_none() {
            return Err(format!("{s:?}: central series not scalar"));
        }
    }
    Ok(format!("RTT on {} gl(1|1) fixtures (both parities), Drinfeld + central series on {} shapes", fixtures.len(), shapes.len()))
}

fn thin_irreducible() -> Outcome {
    let shapes = tested_shapes();
    for s in &shapes {
        let rep = yangian::build_current_rep(s).map_err(|e| e.to_string())?;
        if !yangian::is_thin(&rep) {
            return Err(format!("{s:?}: not thin"));
        }
        if !yangian::is_irreducible(&rep).irreducible {
            return Err(format!("{s:?}: transformation graph not strongly connected"));
        }
        require(&yangian::check_nonvanishing(&rep), &format!("{s:?}"))?;
    }
    Ok(format!("{} shapes", shapes.len()))
}

fn gl11_program() -> Outcome {
    let example = Gl11ModuleSpec::from_ints(&[(3, 0), (-1, 0)]).unwrap();
    let v = gl11::analyze_tameness(&example).map_err(|e| e.to_string())?;
    if !(v.thin && v.tame) {
        return Err(format!("L(3,0)⊗L(-1,0): {v:?}"));
    }
    let rep = tensor_rep(&example).map_err(|e| e.to_string())?;
    let mut hw = rep.highest_weights().map_err(|e| e.to_string())?;
    hw.sort();
    if hw != vec![(int(1), int(1)), (int(2), int(0))] {
        return Err(format!("restricted highest weights {hw:?}"));
    }
    let fixtures = gl11_fixtures();
    let mut double_roots = 0;
    for spec in &fixtures {
        let rep = tensor_rep(spec).map_err(|e| e.to_string())?;
        if rep.dim() != 1 << spec.k() {
            return Err(format!("{spec:?}: dim {}", rep.dim()));
        }
        let phi = is_squarefree(&spec.phi()).map_err(|e| e.to_string())?;
        let psi = is_squarefree(&spec.psi()).map_err(|e| e.to_string())?;
        double_roots += usize::from(!phi);
        let bf = semisimplicity(&rep).map_err(|e| e.to_string())?;
        let flipped = semisimplicity(&rep.flipped()).map_err(|e| e.to_string())?;
        if bf.tame != phi || bf.thin != phi || flipped.tame != psi || flipped.thin != psi {
            return Err(format!("{spec:?}: brute force disagrees with the closed form"));
        }
    }
    if fixtures.len() < 50 || double_roots == 0 {
        return Err(format!("sweep too small: {} specs, {double_roots} with double roots", fixtures.len()));
    }
    Ok(format!(
        "example thin and tame with highest weights (2,0), (1,1); {} specs ({double_roots} with double roots of φ), 0 disagreements",
        fixtures.len()
    ))
}

fn quantum_layer() -> Outcome {
    let opts = QVerifyOptions {
        window: 4,
        samples: 20,
        seed: 0,
    };
    let shapes = tested_shapes();
    for s in &shapes {
        let g = qaffine::q_gt_action(s).map_err(|e| e.to_string())?;
        if !qaffine::q_gt_classical_limit(&g).map_err(|e| e.to_string())? {
            return Err(format!("{s:?}: classical limit differs"));
        }
        require(&qaffine::check_q_superalgebra_relations(&g), &format!("{s:?}"))?;
        let rep = qaffine::build_q_current_rep(s).map_err(|e| e.to_string())?;
        require(&qaffine::verify_q_relations(&rep, &opts).map_err(|e| e.to_string())?, &format!("{s:?}"))?;
        if !qaffine::is_q_thin(&rep) || !qaffine::is_q_irreducible(&rep).irreducible {
            return Err(format!("{s:?}: not thin or not irreducible"));
        }
        require(&qaffine::check_q_nonvanishing(&rep), &format!("{s:?}"))?;
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let r = qaffine::build_q_r_matrix(m, n).map_err(|e| e.to_string())?;
        require(&qaffine::ybe_spot_check(&r, &int(2), 5, 1, true), &format!("YBE ({m}|{n})"))?;
    }
    Ok(format!("{} shapes, modes |a| ≤ 4; YBE at 5 triples for 4 superalgebras", shapes.len()))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_gtskew");
    let runs: [&[&str]; 3] = [
        &["verify", "--m", "2", "--n", "1", "--lambda", "2,1,0", "--seed", "11"],
        &["quantum", "--m", "1", "--n", "1", "--r", "1", "--lambda", "2,1,0", "--mu", "1", "--seed", "11", "--window", "2"],
        &["gl11", "--spec", "[[3,0],[-1,0]]", "--seed", "11"],
    ];
    for args in runs {
        let go = || Command::new(bin).args(args).env_remove("GTSKEW_CACHE_DIR").output().map_err(|e| e.to_string());
        let (a, b) = (go()?, go()?);
        if !a.status.success() || a.stdout.is_empty() {
            return Err(format!("{args:?}: exit {:?}", a.status.code()));
        }
        if a.stdout != b.stdout {
            return Err(format!("{args:?}: outputs differ"));
        }
    }
    Ok(format!("{} commands, byte-identical", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("GT dimension/count", gt_count),
        ("oracle equivalence of the Yangian currents", oracle_equivalence),
        ("relation suites", relation_suites),
        ("thinness and irreducibility", thin_irreducible),
        ("gl(1|1) program", gl11_program),
        ("quantum layer", quantum_layer),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
