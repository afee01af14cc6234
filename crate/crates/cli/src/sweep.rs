//! Row generation and CSV output for the sweep commands.

use std::f64::consts::PI;
use std::io::Write;

use anyhow::{ensure, Result};
use hopf_ent::dynamics::period;
use hopf_ent::{maximize_e_over_t, DeformParam, EntanglementRecord};
use rayon::prelude::*;

use crate::oracle::analytic_e_max;

pub const TIME_HEADER: [&str; 7] = [
    "q",
    "t",
    "E",
    "E_tilde",
    "ep",
    "choi_vs_trace_dev",
    "closed_vs_numeric_dev",
];

pub const Q_HEADER: [&str; 5] = ["q", "t_star", "E_max", "analytic_E_max", "deviation"];

pub const MC_HEADER: [&str; 8] = [
    "q",
    "t",
    "n_samples",
    "seed",
    "estimate",
    "std_error",
    "closed_form",
    "z_score",
];

/// 17 significant digits, so every double round-trips.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// One `sweep-q` row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxRow {
    pub q: f64,
    pub t_star: f64,
    pub e_max: f64,
    pub analytic_e_max: f64,
    pub deviation: f64,
}

/// Rows ordered by `(q, t)`; `t` spans `[0, periods · 2π/α(q)]` per `q`.
pub fn time_rows(
    qs: &[DeformParam],
    points: usize,
    periods: f64,
) -> Result<Vec<EntanglementRecord>> {
    ensure!(points >= 2, "--points must be at least 2");
    ensure!(
        periods.is_finite() && periods > 0.0,
        "--periods must be positive"
    );
    let jobs: Vec<(DeformParam, f64)> = qs
        .iter()
        .flat_map(|&q| {
            let span = periods * period(q);
            (0..points).map(move |k| (q, span * k as f64 / (points - 1) as f64))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(q, t)| EntanglementRecord::compute(q, t).map_err(Into::into))
        .collect()
}

/// `points` evenly spaced `q` values in `[q_min, q_max]`, each maximized over `t`.
pub fn q_rows(q_min: f64, q_max: f64, points: usize) -> Result<Vec<MaxRow>> {
    ensure!(q_min > 0.0 && q_min < q_max, "need 0 < --min < --max");
    ensure!(points >= 2, "--points must be at least 2");
    (0..points)
        .into_par_iter()
        .map(|k| {
            let q = q_min + (q_max - q_min) * k as f64 / (points - 1) as f64;
            let m = maximize_e_over_t(DeformParam::new(q)?)?;
            let analytic = analytic_e_max(q);
            Ok(MaxRow {
                q,
                t_star: m.t_star,
                e_max: m.e_max,
                analytic_e_max: analytic,
                deviation: (m.e_max - analytic).abs(),
            })
        })
        .collect()
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_time_csv<W: Write>(out: W, rows: &[EntanglementRecord]) -> Result<()> {
    let mut w = writer(out);
    w.write_record(TIME_HEADER)?;
    for r in rows {
        w.write_record(
            [
                r.q,
                r.t,
                r.e,
                r.e_tilde,
                r.ep,
                r.choi_vs_trace_dev,
                r.closed_vs_numeric_dev,
            ]
            .map(fmt_f64),
        )?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_q_csv<W: Write>(out: W, rows: &[MaxRow]) -> Result<()> {
    let mut w = writer(out);
    w.write_record(Q_HEADER)?;
    for r in rows {
        w.write_record([r.q, r.t_star, r.e_max, r.analytic_e_max, r.deviation].map(fmt_f64))?;
    }
    w.flush()?;
    Ok(())
}

/// Result of `mc-ep`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McReport {
    pub q: f64,
    pub t: f64,
    pub n_samples: usize,
    pub seed: u64,
    pub estimate: f64,
    pub std_error: f64,
    pub closed_form: f64,
    pub z_score: f64,
}

pub fn write_mc_csv<W: Write>(out: W, r: &McReport) -> Result<()> {
    let mut w = writer(out);
    w.write_record(MC_HEADER)?;
    w.write_record([
        fmt_f64(r.q),
        fmt_f64(r.t),
        r.n_samples.to_string(),
        r.seed.to_string(),
        fmt_f64(r.estimate),
        fmt_f64(r.std_error),
        fmt_f64(r.closed_form),
        fmt_f64(r.z_score),
    ])?;
    w.flush()?;
    Ok(())
}

/// Time at which `αt = π` (half a period); handy for `mc-ep`.
pub fn half_period(q: DeformParam) -> f64 {
    PI / q.alpha()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_round_trips() {
        for x in [0.0, 0.4608, 1.0 / 3.0, 2.0f64.sqrt(), 1e-300, -7.25e12] {
            let s = fmt_f64(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(fmt_f64(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn time_rows_are_ordered() {
        let qs = [1.0, 2.0].map(|q| DeformParam::new(q).unwrap());
        let rows = time_rows(&qs, 5, 1.0).unwrap();
        assert_eq!(rows.len(), 10);
        assert!(rows[..5].iter().all(|r| r.q == 1.0));
        assert!(rows[5..].iter().all(|r| r.q == 2.0));
        assert!(rows[..5].windows(2).all(|w| w[1].t > w[0].t));
        assert_eq!(rows[0].t, 0.0);
        assert!((rows[9].t - period(qs[1])).abs() < 1e-15);
        assert!(time_rows(&qs, 1, 1.0).is_err());
    }

    #[test]
    fn q_rows_validation() {
        assert!(q_rows(0.0, 2.0, 5).is_err());
        assert!(q_rows(2.0, 1.0, 5).is_err());
        assert!(q_rows(1.0, 2.0, 1).is_err());
        let rows = q_rows(1.0, 3.0, 3).unwrap();
        assert_eq!(rows[0].e_max, 0.0);
        assert!((rows[1].e_max - 0.4608).abs() < 1e-9);
        assert!((rows[2].e_max - 0.5).abs() < 1e-9);
    }

    #[test]
    fn csv_layout() {
        let rows = q_rows(1.0, 2.0, 2).unwrap();
        let mut buf = Vec::new();
        write_q_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.split('\n').collect();
        assert_eq!(lines[0], "q,t_star,E_max,analytic_E_max,deviation");
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[3], "");
        assert!(!text.contains('\r'));
    }
}
