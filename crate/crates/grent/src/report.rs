//! Report rows and their JSON / CSV renderings.

use std::fmt::Write as _;

use grent_core::randic::{normalized_randic, randic_index};
use grent_core::rewire::{assortativity_r, Trace};
use grent_core::spectral::{chain_from_perron, dynamical_entropy, spectral_radius};
use grent_core::{AlphaProfile, Error, Graph};
use serde::{Deserialize, Serialize};

/// Version of every JSON document this crate writes.
pub const SCHEMA_VERSION: &str = "1.0";

pub const DEFAULT_ALPHAS: [f64; 3] = [0.5, 1.0, 2.0];

/// Significant figures of the printed table.
pub const TABLE_DIGITS: usize = 5;
/// Decimals of the printed average degree.
pub const AVG_DECIMALS: usize = 3;
/// Significant figures of sweep and trace CSV values.
pub const CSV_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandicColumn {
    pub alpha: f64,
    pub r: f64,
    pub rbar: f64,
}

/// One row of the network table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec_version: String,
    pub network: String,
    pub n: usize,
    pub m: usize,
    pub d_avg: f64,
    pub d_max: usize,
    pub d_min: usize,
    pub randic: Vec<RandicColumn>,
    pub lambda_half: f64,
    pub h_bits: f64,
    /// `None` when every edge joins equal degrees (zero variance).
    pub assortativity: Option<f64>,
}

pub fn analyze(network: &str, g: &Graph, alphas: &[f64]) -> Result<AnalysisReport, Error> {
    let spectral = spectral_radius(g)?;
    let stats = g.degree_stats();
    let assortativity = match assortativity_r(g) {
        Ok(r) => Some(r),
        Err(Error::Undefined(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(AnalysisReport {
        spec_version: SCHEMA_VERSION.into(),
        network: network.into(),
        n: g.n(),
        m: g.m(),
        d_avg: stats.avg(),
        d_max: stats.max,
        d_min: stats.min,
        randic: alphas
            .iter()
            .map(|&alpha| RandicColumn { alpha, r: randic_index(g, alpha), rbar: normalized_randic(g, alpha) })
            .collect(),
        lambda_half: spectral.lambda / 2.0,
        h_bits: spectral.entropy_bits(),
        assortativity,
    })
}

impl AnalysisReport {
    pub fn randic_at(&self, alpha: f64) -> Option<&RandicColumn> {
        self.randic.iter().find(|c| c.alpha == alpha)
    }

    /// True when both rows describe the same degree information.
    pub fn same_degrees(&self, other: &AnalysisReport) -> bool {
        (self.n, self.m, self.d_max, self.d_min) == (other.n, other.m, other.d_max, other.d_min)
            && self.d_avg == other.d_avg
    }

    pub fn csv_header(&self) -> String {
        let mut h = String::from("network,n,m,d_avg,d_max,d_min");
        for c in &self.randic {
            let a = fmt_alpha(c.alpha);
            write!(h, ",R_{a},Rbar_{a}").unwrap();
        }
        h.push_str(",lambda_half,H_bits,r");
        h
    }

    /// The row in table style: 5 significant figures, `d_avg` to 3 decimals.
    pub fn csv_row(&self) -> String {
        let mut row = format!(
            "{},{},{},{:.*},{},{}",
            self.network, self.n, self.m, AVG_DECIMALS, self.d_avg, self.d_max, self.d_min
        );
        for c in &self.randic {
            write!(row, ",{},{}", fmt_sig(c.r, TABLE_DIGITS), fmt_sig(c.rbar, TABLE_DIGITS)).unwrap();
        }
        let r = self.assortativity.map_or_else(|| "NA".to_string(), |r| fmt_sig(r, TABLE_DIGITS));
        write!(row, ",{},{},{}", fmt_sig(self.lambda_half, TABLE_DIGITS), fmt_sig(self.h_bits, TABLE_DIGITS), r).unwrap();
        row
    }
}

/// Header plus one row per report; all reports must share an α list.
pub fn reports_csv(reports: &[AnalysisReport]) -> String {
    let mut out = String::new();
    if let Some(first) = reports.first() {
        out.push_str(&first.csv_header());
        out.push('\n');
    }
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// An original network next to its BFD realization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BfdPair {
    pub spec_version: String,
    pub original: AnalysisReport,
    pub bfd: AnalysisReport,
}

/// Summary of the maximum-entropy chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarkovReport {
    pub spec_version: String,
    pub lambda: f64,
    #[serde(rename = "H_bits")]
    pub h_bits: f64,
    pub stationary: Vec<f64>,
    #[serde(rename = "h_of_Pstar")]
    pub h_of_pstar: f64,
    /// `|h(P*) − log₂ λ|`.
    pub residual: f64,
    /// `‖A f − λ f‖∞` of the eigenpair behind the chain.
    pub eigen_residual: f64,
}

pub fn markov(g: &Graph) -> Result<MarkovReport, Error> {
    let spectral = spectral_radius(g)?;
    let chain = chain_from_perron(g, &spectral);
    let h = dynamical_entropy(&chain);
    let h_bits = spectral.entropy_bits();
    Ok(MarkovReport {
        spec_version: SCHEMA_VERSION.into(),
        lambda: spectral.lambda,
        h_bits,
        stationary: chain.stationary().to_vec(),
        h_of_pstar: h,
        residual: (h - h_bits).abs(),
        eigen_residual: spectral.residual,
    })
}

/// The BFD-tree of a tree sequence with its report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeReport {
    pub spec_version: String,
    pub degrees: Vec<usize>,
    pub lambda: f64,
    /// Vertices in BFD order.
    pub order: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub report: AnalysisReport,
}

/// Sweep CSV: one row per grid point, then a `#` summary line.
pub fn sweep_csv(profile: &AlphaProfile, lambda: f64) -> String {
    let mut out = String::from("alpha,R,Rbar,logRbar,HE,HV,renyi,tsallis\n");
    for r in &profile.records {
        let cells = [r.alpha, r.r, r.rbar, r.log_rbar, r.h_e, r.h_v, r.renyi, r.tsallis];
        let cells: Vec<String> = cells.iter().map(|&x| fmt_sig(x, CSV_DIGITS)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    let (alpha_star, rbar_star, flat) = match &profile.star {
        Some(s) => (fmt_sig(s.alpha, CSV_DIGITS), fmt_sig(s.rbar, CSV_DIGITS), s.flat),
        None => ("NA".into(), "NA".into(), false),
    };
    writeln!(
        out,
        "# alpha_star={alpha_star},rbar_star={rbar_star},log2_lambda_half={},flat={flat}",
        fmt_sig((lambda / 2.0).log2(), CSV_DIGITS)
    )
    .unwrap();
    out
}

pub fn trace_csv(trace: &Trace) -> String {
    let mut out = String::from("step,dx,dy,da,db,deltaR,R\n");
    for s in &trace.steps {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            s.step,
            s.dx,
            s.dy,
            s.da,
            s.db,
            fmt_sig(s.delta_r, CSV_DIGITS),
            fmt_sig(s.r, CSV_DIGITS)
        )
        .unwrap();
    }
    out
}

/// `x` to `digits` significant figures: fixed notation for exponents in
/// `-4..digits`, otherwise `1.2340e5` style.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    let sci = format!("{:.*e}", digits - 1, x);
    // Exponent after rounding, so 9.99996 at 5 digits is treated as 10.000.
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if exp < -4 || exp >= digits as i32 {
        sci
    } else {
        format!("{:.*}", (digits as i32 - 1 - exp) as usize, x)
    }
}

fn fmt_alpha(alpha: f64) -> String {
    format!("{alpha}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_figures() {
        assert_eq!(fmt_sig(499.4979, 5), "499.50");
        assert_eq!(fmt_sig(3.20187, 5), "3.2019");
        assert_eq!(fmt_sig(3640.0, 5), "3640.0");
        assert_eq!(fmt_sig(270400.0, 5), "2.7040e5");
        assert_eq!(fmt_sig(9.99996, 5), "10.000");
        assert_eq!(fmt_sig(-0.0123456, 3), "-0.0123");
        assert_eq!(fmt_sig(1.5e-7, 3), "1.50e-7");
        assert_eq!(fmt_sig(0.0, 3), "0.00");
        assert_eq!(fmt_sig(1.0, 12), "1.00000000000");
    }

    #[test]
    fn cycle_row() {
        let r = analyze("c10", &Graph::cycle(10), &DEFAULT_ALPHAS).unwrap();
        assert_eq!(r.csv_header(), "network,n,m,d_avg,d_max,d_min,R_0.5,Rbar_0.5,R_1,Rbar_1,R_2,Rbar_2,lambda_half,H_bits,r");
        assert_eq!(r.csv_row(), "c10,10,10,2.000,2,2,20.000,1.0000,40.000,1.0000,160.00,1.0000,1.0000,1.0000,NA");
        assert_eq!(r.assortativity, None);
        assert!(r.same_degrees(&r.clone()));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["spec_version"], SCHEMA_VERSION);
    }

    #[test]
    fn markov_on_path() {
        let m = markov(&Graph::path(3)).unwrap();
        assert!((m.h_of_pstar - 0.5).abs() < 1e-12);
        let json = serde_json::to_value(&m).unwrap();
        for key in ["spec_version", "lambda", "H_bits", "stationary", "h_of_Pstar", "residual"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }
}
