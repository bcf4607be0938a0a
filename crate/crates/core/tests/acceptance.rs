//! The twelve acceptance criteria, one pass/fail line each.

use std::process::ExitCode;
use std::time::Instant;

use braidlab_core::braid::{delta_sq, little_delta, sub_delta_sq};
use braidlab_core::circular::{rot, semiconjugacy_experiment, verify_cocycle_axioms, CircularCocycle, QuotientElement};
use braidlab_core::cones::{fdtc, tau_interval, Surface, Q};
use braidlab_core::laws::{
    contrast_cone, convergence_experiment, rigidity_experiment, verify_bounded_translation, verify_continuity_bound,
    verify_dd_suite, verify_dehornoy_ball, verify_floor_defect, verify_garside_identities, verify_lemma_identities,
    verify_relative_translation, z_positive_cones,
};
use braidlab_core::realisation::realisation_experiment;
use braidlab_core::report::LawReport;
use braidlab_core::sampling::Sampler;
use braidlab_core::sl2::{braid_to_matrix, matrix_to_braid, psl2_rot, sl2_rot, SL2Matrix};
use braidlab_core::{Cone, RationalInterval, Result};

/// Outcome of one criterion: pass flag and a short summary.
type Outcome = Result<(bool, String)>;

fn all(reports: &[LawReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.passed);
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{}: {}", r.law, r.counterexample.clone().unwrap_or_default()))
        .collect();
    let checks: u64 = reports.iter().map(|r| r.checks).sum();
    let detail = if ok { format!("{} reports, {checks} checks", reports.len()) } else { failed.join("; ") };
    (ok, detail)
}

fn field<'a>(r: &'a LawReport, key: &str) -> &'a str {
    r.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str()).unwrap_or("")
}

fn garside_laws() -> Outcome {
    Ok(all(&(3..=6).map(verify_garside_identities).collect::<Result<Vec<_>>>()?))
}

fn lemma_identities() -> Outcome {
    Ok(all(&(3..=6).map(|n| verify_lemma_identities(n, 5)).collect::<Result<Vec<_>>>()?))
}

fn dehornoy_balls() -> Outcome {
    Ok(all(&[verify_dehornoy_ball(3, 6)?, verify_dehornoy_ball(4, 5)?]))
}

fn dd_suite() -> Outcome {
    let r3 = verify_dd_suite(&Cone::dd(3)?, 6, 6)?;
    let r4 = verify_dd_suite(&Cone::dd(4)?, 5, 6)?;
    let (ok, detail) = all(&[r3.clone(), r4.clone()]);
    let parity = Cone::dd(3)?.sign(&delta_sq(3))? == -1 && Cone::dd(4)?.sign(&delta_sq(4))? == 1;
    Ok((ok && parity, format!("{detail}; Δ₃² sign {}, Δ₄² sign {}", field(&r3, "delta_sq_sign"), field(&r4, "delta_sq_sign"))))
}

fn rigidity() -> Outcome {
    let reports = vec![rigidity_experiment(3, 20, 32, 7)?, rigidity_experiment(4, 20, 32, 7)?];
    let (mut ok, detail) = all(&reports);
    let mut notes = Vec::new();
    for (r, expected) in reports.iter().zip([Q::new(1, 3), Q::new(1, 2)]) {
        let n: usize = field(r, "n").parse().unwrap();
        let t = tau_interval(&contrast_cone(n)?, &sub_delta_sq(n), 32)?;
        ok &= t.contains(expected) && t.width() == Q::new(1, 32);
        notes.push(format!("n={} expsum {}", field(r, "n"), field(r, "tau_sub.contrast")));
    }
    Ok((ok, format!("{detail}; {}", notes.join(", "))))
}

fn bounded_translation() -> Outcome {
    let reports = (3..=5).map(|n| verify_bounded_translation(&z_positive_cones(n)?, 64)).collect::<Result<Vec<_>>>()?;
    Ok(all(&reports))
}

fn quasimorphism() -> Outcome {
    let mut reports = Vec::new();
    for n in [3, 4] {
        let cones = z_positive_cones(n)?;
        let defect = verify_floor_defect(&cones, 200, 0)?;
        let ok = defect.checks >= 200 * cones.len() as u64;
        reports.push(defect.with("enough_pairs", ok));
        reports.push(verify_continuity_bound(&cones, 4, 12, 0)?);
        reports.push(verify_relative_translation(n, 4)?);
    }
    Ok(all(&reports))
}

fn convergence() -> Outcome {
    let r = convergence_experiment(3, 8, 4)?;
    let (ok, detail) = all(std::slice::from_ref(&r));
    Ok((ok, format!("{detail}; agreement {}", field(&r, "agreement"))))
}

fn circular() -> Outcome {
    let fd = CircularCocycle::from_cone(&Cone::dehornoy(3)?)?;
    let axioms = verify_cocycle_axioms(&fd, 500, 8, 0)?;
    let r_sub = rot(&fd, &QuotientElement::from_braid(&sub_delta_sq(3)), 64)?;
    let r_delta = rot(&fd, &QuotientElement::from_braid(&little_delta(3)), 30)?;
    let semi = semiconjugacy_experiment(3, 20, 30, 0)?;
    let (ok, detail) = all(&[axioms, semi.clone()]);
    let values = r_sub.contains_mod_one(Q::from_integer(0)) && r_delta.contains_mod_one(Q::new(1, 3));
    Ok((
        ok && values,
        format!("{detail}; rot(Δ₂²) {r_sub}, rot(δ₃) {r_delta}, expsum rot(Δ₂²) {}", field(&semi, "rot_sub.expsum")),
    ))
}

fn sl2_suite() -> Outcome {
    let mut s = Sampler::new(0);
    let mut round_trip = true;
    for w in s.words_up_to(3, 20, 200) {
        let m = braid_to_matrix(&w)?;
        let back = matrix_to_braid(&m)?;
        let kernel = w.invert().compose(&back)?.normal_form();
        round_trip &= braid_to_matrix(&back)? == m && kernel.is_delta_sq_power() && kernel.delta_power() % 4 == 0;
    }
    let images = braid_to_matrix(&delta_sq(3))? == SL2Matrix::IDENTITY.neg()
        && braid_to_matrix(&delta_sq(3).pow(2))? == SL2Matrix::IDENTITY;
    let (d, e) = (Cone::dehornoy(3)?, contrast_cone(3)?);
    let k = 64;
    let zero = Q::from_integer(0);
    let a_d = sl2_rot(&SL2Matrix::A, &d, k)?;
    let a_e = sl2_rot(&SL2Matrix::A, &e, k)?;
    let minus = sl2_rot(&SL2Matrix::IDENTITY.neg(), &d, k)?;
    let f = psl2_rot(&SL2Matrix::new(-1, 2, 0, -1)?, &d, k)?;
    let tight = |t: &RationalInterval| t.width() <= Q::new(1, k);
    let rots = a_d.contains_mod_one(zero)
        && !a_e.contains_mod_one(zero)
        && minus.contains_mod_one(Q::new(1, 2))
        && f.contains_mod_one(zero)
        && [a_d, a_e, minus, f].iter().all(tight);
    Ok((
        round_trip && images && rots,
        format!("round trip {round_trip}, Δ² images {images}; sl2_rot(A) {a_d} (expsum {a_e}), sl2_rot(-I) {minus}, psl2_rot(F) {f}"),
    ))
}

fn realisation() -> Outcome {
    let r = realisation_experiment(&Cone::dehornoy(3)?, 5, 8, 32)?;
    let (ok, detail) = all(std::slice::from_ref(&r));
    Ok((
        ok,
        format!(
            "{detail}; numeric δ₃ {}, Δ₂² {}, σ₁ {}",
            field(&r, "numeric_tau.delta"),
            field(&r, "numeric_tau.sub_delta_sq"),
            field(&r, "numeric_tau.sigma1")
        ),
    ))
}

fn fdtc_values() -> Outcome {
    let k = 32;
    let mut ok = true;
    for n in [3usize, 4] {
        for m in -2i64..=2 {
            let t = fdtc(&delta_sq(n).pow(m), Surface::Disk, k)?;
            ok &= t == RationalInterval::new(Q::from_integer(m), Q::new(m * k + 1, k));
        }
        ok &= fdtc(&little_delta(n), Surface::Disk, k)?.contains(Q::new(1, n as i64));
    }
    let torus = fdtc(&little_delta(3), Surface::Torus, 60)?;
    ok &= torus.contains(Q::new(1, 6));
    Ok((ok, format!("torus δ₃ {torus}")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("Garside laws", garside_laws),
        ("power identities", lemma_identities),
        ("Dehornoy ball suite", dehornoy_balls),
        ("DD suite", dd_suite),
        ("rigidity", rigidity),
        ("bounded translation", bounded_translation),
        ("quasimorphism defect", quasimorphism),
        ("convergence", convergence),
        ("circular cocycles", circular),
        ("SL2 suite", sl2_suite),
        ("realisation cross-check", realisation),
        ("FDTC", fdtc_values),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failures += 1;
        }
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {name} ({:.1}s): {detail}", i + 1, start.elapsed().as_secs_f64());
    }
    println!("acceptance: {}/12 passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
