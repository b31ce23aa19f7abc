//! Straight-line reference computations used to check the library.
//!
//! Nothing here calls into the crate: reports and catalogs are read as raw
//! JSON values and every formula is written out longhand.

#![allow(dead_code)]

use serde_json::Value;

pub const TABLE_ALPHA: [f64; 3] = [1.0, 0.8, 0.6];

fn count(obs: &Value, key: &str) -> f64 {
    obs[key].as_u64().unwrap_or_else(|| panic!("missing {key}")) as f64
}

/// Sum of all finding counts of a raw report document.
pub fn total_tests(report: &Value) -> f64 {
    report["observations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            count(o, "n_err") + count(o, "n_ok") + count(o, "n_likely") + count(o, "n_potential")
        })
        .sum()
}

fn criterion<'a>(catalog: &'a Value, id: &str) -> Option<&'a Value> {
    catalog.as_array().unwrap().iter().find(|c| c["id"] == id)
}

fn in_frame(spec: &Value, frame: &str) -> bool {
    frame == "global"
        || spec["frames"]
            .as_array()
            .unwrap()
            .iter()
            .any(|f| f == frame)
}

fn alpha(spec: &Value, alpha: [f64; 3]) -> f64 {
    match spec["level"].as_str().unwrap() {
        "A" => alpha[0],
        "AA" => alpha[1],
        "AAA" => alpha[2],
        other => panic!("level {other}"),
    }
}

/// Estimates, masses and discounted masses for one raw report.
pub fn source_masses(report: &Value, catalog: &Value, frame: &str, alphas: [f64; 3]) -> [f64; 3] {
    let a = &report["assessor"];
    let beta_e = a["beta_e"].as_f64().unwrap();
    let beta_l = a["beta_l"].as_f64().unwrap();
    let beta_p = a["beta_p"].as_f64().unwrap();
    let delta = a["delta"].as_f64().unwrap();

    let t_i = total_tests(report);
    let mut ok_w = 0.0;
    let mut err_w = 0.0;
    let mut err_t = 0.0;
    let mut prob_w = 0.0;
    let mut prob_t = 0.0;
    for o in report["observations"].as_array().unwrap() {
        let Some(spec) = criterion(catalog, o["criterion"].as_str().unwrap()) else {
            continue;
        };
        if !in_frame(spec, frame) {
            continue;
        }
        let w = alpha(spec, alphas);
        ok_w += count(o, "n_ok") * w;
        err_w += count(o, "n_err") * w * beta_e;
        err_t += count(o, "t_err");
        prob_w += count(o, "n_likely") * w * beta_l + count(o, "n_potential") * w * beta_p;
        prob_t += count(o, "t_likely") + count(o, "t_potential");
    }
    let e_ac = if t_i > 0.0 { ok_w / t_i } else { 0.0 };
    let e_nac = if err_t > 0.0 { err_w / err_t } else { 0.0 };
    let e_om = if prob_t > 0.0 { prob_w / prob_t } else { 0.0 };
    let s = e_ac + e_nac + e_om;
    let (m_ac, m_nac, m_om) = if s > 0.0 {
        (e_ac / s, e_nac / s, e_om / s)
    } else {
        (0.0, 0.0, 1.0)
    };
    [delta * m_ac, delta * m_nac, 1.0 - delta * (1.0 - m_om)]
}

/// Fused pignistic decision for a page, or `None` under total conflict.
pub fn page_decision(
    reports: &[Value],
    catalog: &Value,
    frame: &str,
    alphas: [f64; 3],
) -> Option<f64> {
    let mut fused = [0.0, 0.0, 1.0, 0.0];
    for r in reports {
        let m = source_masses(r, catalog, frame, alphas);
        fused = brute_force_combine(fused, [m[0], m[1], m[2], 0.0]);
    }
    let conflict = fused[3];
    (conflict < 1.0 - 1e-12).then(|| (fused[0] + fused[2] / 2.0) / (1.0 - conflict))
}

/// Mass vectors are `[ac, nac, omega, empty]`. Subsets of the frame are bit
/// masks: 0b01 = {Ac}, 0b10 = {NotAc}, 0b11 = Ω, 0b00 = ∅; the combined mass of
/// every pair of subsets lands on their intersection.
pub fn brute_force_combine(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    const SETS: [u8; 4] = [0b01, 0b10, 0b11, 0b00];
    let slot = |set: u8| SETS.iter().position(|s| *s == set).unwrap();
    let mut out = [0.0; 4];
    for (i, sa) in SETS.iter().enumerate() {
        for (j, sb) in SETS.iter().enumerate() {
            out[slot(sa & sb)] += a[i] * b[j];
        }
    }
    out
}

/// Micro pipeline for a single level-A criterion with an explicit total test count.
pub struct Micro {
    pub e: [f64; 3],
    pub m: [f64; 3],
    pub decision: f64,
}

#[allow(clippy::too_many_arguments)]
pub fn micro(
    n_ok: f64,
    n_err: f64,
    t_err: f64,
    n_likely: f64,
    t_likely: f64,
    total: f64,
    beta: [f64; 3],
    delta: f64,
) -> Micro {
    let e_ac = n_ok * 1.0 / total;
    let e_nac = n_err * 1.0 * beta[0] / t_err;
    let e_om = n_likely * 1.0 * beta[1] / t_likely;
    let s = e_ac + e_nac + e_om;
    let m = [e_ac / s, e_nac / s, e_om / s];
    let d = [delta * m[0], delta * m[1], 1.0 - delta * (1.0 - m[2])];
    Micro {
        e: [e_ac, e_nac, e_om],
        m,
        decision: d[0] + d[2] / 2.0,
    }
}
