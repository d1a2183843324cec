//! Sweeps that check each closed form against an independent brute-force
//! computation and emit one [`VerificationReport`] per parameter point.
//!
//! Reports stream through a caller-supplied sink. Parameter points are
//! grouped into batches (one per word length, or per `γ`); a batch may run
//! in parallel, but its reports are emitted in parameter order, so the
//! stream is identical under every [`Exec`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use crate::codes::{
    cardinality_closed_form, cardinality_residue, decode_single_deletion,
    is_single_deletion_correcting, r_poly_closed_form, residue_counts, sphere_cardinality,
    sphere_residue, CodeSpec,
};
use crate::numtheory::{divisors, gcd};
use crate::qpoly::{eval_at_root_of_unity, q_binomial, q_binomial_limit_at_primitive_root, QPoly};
use crate::words::{constant_weight_dm, run_class_table, run_weighted_dm, ConstantWeight};
use crate::{Error, Exec, Result};

/// Where in parameter space a report was taken. Unused coordinates are
/// `None` and are omitted from JSON.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ParamPoint {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
}

impl ParamPoint {
    fn ab(alpha: usize, beta: usize) -> Self {
        ParamPoint {
            alpha: Some(alpha as u64),
            beta: Some(beta as u64),
            ..Default::default()
        }
    }

    fn with_m(self, m: usize) -> Self {
        ParamPoint {
            m: Some(m as u64),
            ..self
        }
    }

    fn with_r(self, r: usize) -> Self {
        ParamPoint {
            r: Some(r as u64),
            ..self
        }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields = [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("m", self.m),
            ("r", self.r),
            ("d", self.d),
            ("k", self.k),
        ];
        let mut first = true;
        for (name, value) in fields {
            if let Some(v) = value {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub point: ParamPoint,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    /// Present only for floating-point comparisons.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    fn exact(
        identity: &str,
        point: ParamPoint,
        expected: impl ToString,
        actual: impl ToString,
        elapsed_ms: f64,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        VerificationReport {
            identity: identity.to_string(),
            point,
            passed: expected == actual,
            expected,
            actual,
            tolerance: None,
            elapsed_ms,
        }
    }

    fn failed(identity: &str, point: ParamPoint, expected: impl ToString, err: &Error) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            point,
            expected: expected.to_string(),
            actual: format!("error: {err}"),
            passed: false,
            tolerance: None,
            elapsed_ms: 0.0,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<26} {:<28} expected={} actual={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.identity,
            self.point.to_string(),
            self.expected,
            self.actual
        )?;
        if let Some(tol) = self.tolerance {
            write!(f, " tol={tol:e}")?;
        }
        write!(f, " ({:.2} ms)", self.elapsed_ms)
    }
}

/// Pass/fail tally over a report stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn record(&mut self, report: &VerificationReport) {
        if report.passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// The identity families the harness can sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Dm,
    Cardinality,
    Sphere,
    RPoly,
    Roots,
    Decoder,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Dm,
        Identity::Cardinality,
        Identity::Sphere,
        Identity::RPoly,
        Identity::Roots,
        Identity::Decoder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Dm => "dm",
            Identity::Cardinality => "cardinality",
            Identity::Sphere => "sphere",
            Identity::RPoly => "rpoly",
            Identity::Roots => "roots",
            Identity::Decoder => "decoder",
        }
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// Sweep bounds. Defaults keep every family to seconds on a laptop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    /// Max `α + β` for the DM identity.
    pub dm_max_total: usize,
    /// Max `α + β` for counting identities.
    pub cardinality_max_total: usize,
    pub sphere_max_gamma: usize,
    /// Max `α` and `β` for run polynomials.
    pub rpoly_max_ab: usize,
    /// Max `α` and `β` for root-of-unity checks.
    pub roots_max_ab: usize,
    pub roots_tolerance: f64,
    /// Max `α + β` for decoder round trips.
    pub decoder_max_total: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            dm_max_total: 16,
            cardinality_max_total: 18,
            sphere_max_gamma: 8,
            rpoly_max_ab: 8,
            roots_max_ab: 8,
            roots_tolerance: 1e-6,
            decoder_max_total: 12,
        }
    }
}

/// Runs identity sweeps under a fixed execution strategy.
#[derive(Debug, Clone, Copy, Default)]
pub struct Harness {
    exec: Exec,
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Pairs `(α, β)` with `α, β ≥ 1` and `α + β = n`.
fn splits(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|a| (a, n - a)).collect()
}

fn render_complex(z: Complex64) -> String {
    format!("{:.9}{:+.9}i", z.re, z.im)
}

impl Harness {
    pub fn new(exec: Exec) -> Self {
        Harness { exec }
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    /// Evaluates `points` (possibly in parallel) and emits their reports in
    /// input order.
    fn batch<P, F>(&self, points: Vec<P>, f: F, sink: &mut dyn FnMut(VerificationReport))
    where
        P: Send,
        F: Fn(P) -> Vec<VerificationReport> + Sync + Send,
    {
        for reports in self.exec.map(points, f) {
            reports.into_iter().for_each(&mut *sink);
        }
    }

    pub fn run(
        &self,
        identity: Identity,
        bounds: &Bounds,
        sink: &mut dyn FnMut(VerificationReport),
    ) {
        match identity {
            Identity::Dm => self.dm_identity(bounds.dm_max_total, sink),
            Identity::Cardinality => self.cardinality(bounds.cardinality_max_total, sink),
            Identity::Sphere => self.sphere_theorem(bounds.sphere_max_gamma, sink),
            Identity::RPoly => self.r_poly(bounds.rpoly_max_ab, sink),
            Identity::Roots => {
                self.root_of_unity(bounds.roots_max_ab, bounds.roots_tolerance, sink)
            }
            Identity::Decoder => self.decoder(bounds.decoder_max_total, sink),
        }
    }

    /// `DM(C(α, β)) = [α+β over β]` for `α + β ≤ max_total`.
    pub fn dm_identity(&self, max_total: usize, sink: &mut dyn FnMut(VerificationReport)) {
        for n in 2..=max_total {
            self.batch(
                splits(n),
                |(a, b)| {
                    let start = Instant::now();
                    let expected = q_binomial(n as i64, b as i64);
                    let point = ParamPoint::ab(a, b);
                    match constant_weight_dm(a, b, Exec::Sequential) {
                        Ok(actual) => vec![VerificationReport::exact(
                            "dm_equals_qbinomial",
                            point,
                            &expected,
                            &actual,
                            elapsed_ms(start),
                        )],
                        Err(e) => vec![VerificationReport::failed(
                            "dm_equals_qbinomial",
                            point,
                            &expected,
                            &e,
                        )],
                    }
                },
                sink,
            );
        }
    }

    /// Closed-form `#C(α, β, m)` against enumeration, the bound
    /// `#C(α, β, m) ≤ #C(α, β, 0)`, and the residue congruence
    /// `Σ_m #C(α, β, m) q^m ≡ [α+β over β] (mod q^(α+β) - 1)`.
    pub fn cardinality(&self, max_total: usize, sink: &mut dyn FnMut(VerificationReport)) {
        for n in 2..=max_total {
            self.batch(
                splits(n),
                |(a, b)| {
                    cardinality_point(a, b).unwrap_or_else(|e| {
                        vec![VerificationReport::failed(
                            "cardinality_closed_form",
                            ParamPoint::ab(a, b),
                            "closed form",
                            &e,
                        )]
                    })
                },
                sink,
            );
        }
    }

    /// `#dS(C(γ, γ, m)) = (γ + 1) #C(γ, γ, m)` with the sphere measured as a
    /// set.
    pub fn sphere_theorem(&self, max_gamma: usize, sink: &mut dyn FnMut(VerificationReport)) {
        for gamma in 1..=max_gamma {
            self.batch(
                (0..2 * gamma).collect(),
                |m| {
                    let point = ParamPoint::ab(gamma, gamma).with_m(m);
                    let start = Instant::now();
                    let spec = match CodeSpec::new(gamma, gamma, m as i64) {
                        Ok(s) => s,
                        Err(e) => {
                            return vec![VerificationReport::failed(
                                "sphere_theorem",
                                point,
                                "",
                                &e,
                            )]
                        }
                    };
                    let expected = cardinality_closed_form(&spec).map(|c| (gamma as u128 + 1) * c);
                    let count = sphere_cardinality(&spec);
                    match expected {
                        Ok(expected) => vec![VerificationReport::exact(
                            "sphere_theorem",
                            point,
                            expected,
                            count.sphere,
                            elapsed_ms(start),
                        )],
                        Err(e) => vec![VerificationReport::failed(
                            "sphere_theorem",
                            point,
                            count.sphere,
                            &e,
                        )],
                    }
                },
                sink,
            );
        }
    }

    /// Closed-form `R_r(q)` against the run-class oracle; for `α = β = γ`
    /// the pairing `R_r ≡ R_{2γ+2-r} (mod q^{2γ} - 1)`; and the congruence
    /// `Σ_m #dS(C(α, β, m)) q^m ≡ Σ_r r R_r(q)`.
    pub fn r_poly(&self, max_ab: usize, sink: &mut dyn FnMut(VerificationReport)) {
        for n in 2..=2 * max_ab {
            let points: Vec<_> = splits(n)
                .into_iter()
                .filter(|&(a, b)| a <= max_ab && b <= max_ab)
                .collect();
            self.batch(
                points,
                |(a, b)| {
                    r_poly_point(a, b).unwrap_or_else(|e| {
                        vec![VerificationReport::failed(
                            "r_poly_closed_form",
                            ParamPoint::ab(a, b),
                            "closed form",
                            &e,
                        )]
                    })
                },
                sink,
            );
        }
    }

    /// Value of `[α+β over β]` at each primitive `d`-th root of unity
    /// (`d | α+β`) against the closed-form limit, within `tolerance`.
    pub fn root_of_unity(
        &self,
        max_ab: usize,
        tolerance: f64,
        sink: &mut dyn FnMut(VerificationReport),
    ) {
        for n in 2..=2 * max_ab {
            let points: Vec<_> = splits(n)
                .into_iter()
                .filter(|&(a, b)| a <= max_ab && b <= max_ab)
                .collect();
            self.batch(points, |(a, b)| roots_point(a, b, tolerance), sink);
        }
    }

    /// Exhaustive decode of every single deletion of every codeword, plus a
    /// sphere-disjointness check per code.
    pub fn decoder(&self, max_total: usize, sink: &mut dyn FnMut(VerificationReport)) {
        for n in 2..=max_total {
            let points: Vec<_> = splits(n)
                .into_iter()
                .flat_map(|(a, b)| (0..n).map(move |m| (a, b, m)))
                .collect();
            self.batch(points, |(a, b, m)| decoder_point(a, b, m), sink);
        }
    }
}

fn cardinality_point(a: usize, b: usize) -> Result<Vec<VerificationReport>> {
    let n = a + b;
    let start = Instant::now();
    let counts = residue_counts(a, b, Exec::Sequential)?;
    let enumerated_ms = elapsed_ms(start);
    let top = cardinality_closed_form(&CodeSpec::new(a, b, 0)?)?;
    let mut out = Vec::with_capacity(2 * n + 1);
    for (m, &count) in counts.iter().enumerate() {
        let point = ParamPoint::ab(a, b).with_m(m);
        let start = Instant::now();
        let closed = cardinality_closed_form(&CodeSpec::new(a, b, m as i64)?)?;
        let ms = enumerated_ms + elapsed_ms(start);
        out.push(VerificationReport::exact(
            "cardinality_closed_form",
            point,
            closed,
            count,
            ms,
        ));
        let mut bound = VerificationReport::exact(
            "cardinality_bound_m0",
            point,
            format!("<= {top}"),
            closed,
            0.0,
        );
        bound.passed = closed <= top;
        out.push(bound);
    }
    let start = Instant::now();
    let expected = q_binomial(n as i64, b as i64).reduce_mod(n)?;
    let actual = cardinality_residue(a, b, Exec::Sequential)?;
    out.push(VerificationReport::exact(
        "cardinality_congruence",
        ParamPoint::ab(a, b),
        &expected,
        &actual,
        elapsed_ms(start),
    ));
    Ok(out)
}

fn r_poly_point(a: usize, b: usize) -> Result<Vec<VerificationReport>> {
    let n = a + b;
    let start = Instant::now();
    let table = run_class_table(a, b, Exec::Sequential)?;
    let oracle_ms = elapsed_ms(start);
    let mut out = Vec::new();
    for (r, oracle) in table.iter().enumerate().skip(2) {
        let start = Instant::now();
        let closed = r_poly_closed_form(a, b, r as i64);
        out.push(VerificationReport::exact(
            "r_poly_closed_form",
            ParamPoint::ab(a, b).with_r(r),
            &closed,
            oracle,
            oracle_ms + elapsed_ms(start),
        ));
    }
    if a == b {
        // each unordered pair {r, 2γ+2-r} once
        for r in 2..=a + 1 {
            let start = Instant::now();
            let partner = 2 * a + 2 - r;
            let lhs = r_poly_closed_form(a, b, r as i64).reduce_mod(n)?;
            let rhs = r_poly_closed_form(a, b, partner as i64).reduce_mod(n)?;
            out.push(VerificationReport::exact(
                "r_poly_symmetry",
                ParamPoint::ab(a, b).with_r(r),
                &lhs,
                &rhs,
                elapsed_ms(start),
            ));
        }
    }
    let start = Instant::now();
    let weighted: QPoly = table
        .iter()
        .enumerate()
        .map(|(r, p)| p.scale(r as u64))
        .sum();
    let whole = run_weighted_dm(ConstantWeight::new(a, b)?);
    out.push(VerificationReport::exact(
        "run_weighted_dm",
        ParamPoint::ab(a, b),
        &weighted,
        &whole,
        oracle_ms + elapsed_ms(start),
    ));
    let spheres = sphere_residue(a, b)?;
    out.push(VerificationReport::exact(
        "sphere_run_congruence",
        ParamPoint::ab(a, b),
        weighted.reduce_mod(n)?,
        &spheres,
        oracle_ms + elapsed_ms(start),
    ));
    Ok(out)
}

fn roots_point(a: usize, b: usize, tolerance: f64) -> Vec<VerificationReport> {
    let n = (a + b) as u64;
    let poly = q_binomial(n as i64, b as i64);
    let mut out = Vec::new();
    for d in divisors(n).expect("n >= 2") {
        let point = ParamPoint {
            d: Some(d),
            ..ParamPoint::ab(a, b)
        };
        let limit = match q_binomial_limit_at_primitive_root(a as u64, b as u64, d) {
            Ok(v) => v,
            Err(e) => {
                out.push(VerificationReport::failed(
                    "root_of_unity_limit",
                    point,
                    "",
                    &e,
                ));
                continue;
            }
        };
        for k in (0..d).filter(|&k| gcd(k, d) == 1) {
            let start = Instant::now();
            let value = eval_at_root_of_unity(&poly, d, k as i64).expect("d >= 1");
            let diff = (value - Complex64::new(limit as f64, 0.0)).norm();
            out.push(VerificationReport {
                identity: "root_of_unity_limit".into(),
                point: ParamPoint {
                    k: Some(k),
                    ..point
                },
                expected: limit.to_string(),
                actual: render_complex(value),
                passed: diff <= tolerance,
                tolerance: Some(tolerance),
                elapsed_ms: elapsed_ms(start),
            });
        }
    }
    out
}

fn decoder_point(a: usize, b: usize, m: usize) -> Vec<VerificationReport> {
    let point = ParamPoint::ab(a, b).with_m(m);
    let spec = match CodeSpec::new(a, b, m as i64) {
        Ok(s) => s,
        Err(e) => {
            return vec![VerificationReport::failed(
                "decoder_round_trip",
                point,
                "",
                &e,
            )]
        }
    };
    let start = Instant::now();
    let codewords: Vec<_> = spec.codewords().collect();
    let total = codewords.len() * spec.length();
    let mut ok = 0;
    let mut first_error = None;
    for c in &codewords {
        for i in 0..c.len() {
            let received = c.delete(i).expect("index in range");
            match decode_single_deletion(&received, &spec) {
                Ok(Some(d)) if d == *c => ok += 1,
                Ok(other) => {
                    first_error.get_or_insert_with(|| {
                        format!("{received} decoded to {other:?}, sent {c}")
                    });
                }
                Err(e) => {
                    first_error.get_or_insert_with(|| e.to_string());
                }
            }
        }
    }
    let actual = match first_error {
        None => format!("{ok}/{total}"),
        Some(e) => format!("{ok}/{total} ({e})"),
    };
    let round_trip = VerificationReport::exact(
        "decoder_round_trip",
        point,
        format!("{total}/{total}"),
        actual,
        elapsed_ms(start),
    );
    let start = Instant::now();
    let disjoint = is_single_deletion_correcting(&codewords);
    let sdc =
        VerificationReport::exact("sphere_disjoint", point, true, disjoint, elapsed_ms(start));
    vec![round_trip, sdc]
}

fn collect(f: impl FnOnce(&mut dyn FnMut(VerificationReport))) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    f(&mut |r| out.push(r));
    out
}

pub fn verify_dm_identity(max_total_length: usize) -> Vec<VerificationReport> {
    collect(|sink| Harness::default().dm_identity(max_total_length, sink))
}

pub fn verify_cardinality(max_total_length: usize) -> Vec<VerificationReport> {
    collect(|sink| Harness::default().cardinality(max_total_length, sink))
}

pub fn verify_sphere_theorem(max_gamma: usize) -> Vec<VerificationReport> {
    collect(|sink| Harness::default().sphere_theorem(max_gamma, sink))
}

pub fn verify_r_poly(max_ab: usize) -> Vec<VerificationReport> {
    collect(|sink| Harness::default().r_poly(max_ab, sink))
}

pub fn verify_root_of_unity(max_ab: usize, tolerance: f64) -> Vec<VerificationReport> {
    collect(|sink| Harness::default().root_of_unity(max_ab, tolerance, sink))
}

pub fn verify_decoder(max_total_length: usize) -> Vec<VerificationReport> {
    collect(|sink| Harness::default().decoder(max_total_length, sink))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(
        reports: &'a [VerificationReport],
        identity: &str,
        point: ParamPoint,
    ) -> &'a VerificationReport {
        reports
            .iter()
            .find(|r| r.identity == identity && r.point == point)
            .unwrap_or_else(|| panic!("no {identity} report at {point}"))
    }

    #[test]
    fn dm_examples() {
        let reports = verify_dm_identity(4);
        let r = find(&reports, "dm_equals_qbinomial", ParamPoint::ab(2, 2));
        assert_eq!(r.actual, "1 + q + 2q^2 + q^3 + q^4");
        assert!(r.passed);
        assert_eq!(
            find(&reports, "dm_equals_qbinomial", ParamPoint::ab(1, 1)).actual,
            "1 + q"
        );
        assert_eq!(
            find(&reports, "dm_equals_qbinomial", ParamPoint::ab(1, 2)).actual,
            "1 + q + q^2"
        );
        assert!(reports.iter().all(|r| r.passed));
    }

    #[test]
    fn cardinality_examples() {
        let reports = verify_cardinality(4);
        let counts: Vec<_> = (0..4)
            .map(|m| {
                find(
                    &reports,
                    "cardinality_closed_form",
                    ParamPoint::ab(2, 2).with_m(m),
                )
                .actual
                .clone()
            })
            .collect();
        assert_eq!(counts, ["2", "1", "2", "1"]);
        assert_eq!(
            find(
                &reports,
                "cardinality_closed_form",
                ParamPoint::ab(1, 1).with_m(0)
            )
            .actual,
            "1"
        );
        assert_eq!(
            find(
                &reports,
                "cardinality_closed_form",
                ParamPoint::ab(1, 1).with_m(1)
            )
            .actual,
            "1"
        );
        assert!(reports.iter().all(|r| r.passed));
    }

    #[test]
    fn sphere_examples() {
        let reports = verify_sphere_theorem(2);
        let r0 = find(&reports, "sphere_theorem", ParamPoint::ab(2, 2).with_m(0));
        assert_eq!((r0.expected.as_str(), r0.actual.as_str()), ("6", "6"));
        let r1 = find(&reports, "sphere_theorem", ParamPoint::ab(2, 2).with_m(1));
        assert_eq!(r1.actual, "3");
        let g1 = find(&reports, "sphere_theorem", ParamPoint::ab(1, 1).with_m(0));
        assert_eq!(g1.actual, "2");
        assert!(reports.iter().all(|r| r.passed));
    }

    #[test]
    fn r_poly_examples() {
        let reports = verify_r_poly(2);
        assert_eq!(
            find(
                &reports,
                "r_poly_closed_form",
                ParamPoint::ab(2, 2).with_r(3)
            )
            .actual,
            "q + q^3"
        );
        let sym = find(&reports, "r_poly_symmetry", ParamPoint::ab(2, 2).with_r(2));
        assert_eq!(sym.expected, "1 + q^2");
        assert_eq!(sym.actual, "1 + q^2");
        assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
    }

    #[test]
    fn roots_examples() {
        let reports = verify_root_of_unity(2, 1e-6);
        let at = |d, k| ParamPoint {
            d: Some(d),
            k: Some(k),
            ..ParamPoint::ab(2, 2)
        };
        assert_eq!(
            find(&reports, "root_of_unity_limit", at(2, 1)).expected,
            "2"
        );
        assert_eq!(
            find(&reports, "root_of_unity_limit", at(4, 1)).expected,
            "0"
        );
        assert_eq!(
            find(&reports, "root_of_unity_limit", at(4, 3)).expected,
            "0"
        );
        assert_eq!(
            find(&reports, "root_of_unity_limit", at(1, 0)).expected,
            "6"
        );
        assert!(reports.iter().all(|r| r.passed));
    }

    #[test]
    fn decoder_examples() {
        let reports = verify_decoder(4);
        assert_eq!(
            find(
                &reports,
                "decoder_round_trip",
                ParamPoint::ab(2, 2).with_m(0)
            )
            .actual,
            "8/8"
        );
        assert_eq!(
            find(
                &reports,
                "decoder_round_trip",
                ParamPoint::ab(1, 1).with_m(0)
            )
            .actual,
            "2/2"
        );
        assert!(reports.iter().all(|r| r.passed));
    }

    #[test]
    fn stream_is_identical_across_strategies() {
        let strip = |mut v: Vec<VerificationReport>| {
            v.iter_mut().for_each(|r| r.elapsed_ms = 0.0);
            v
        };
        let run = |exec| {
            strip(collect(|sink| {
                let h = Harness::new(exec);
                h.cardinality(9, sink);
                h.r_poly(4, sink);
            }))
        };
        assert_eq!(run(Exec::Sequential), run(Exec::Parallel));
    }

    #[test]
    fn failing_comparison_is_reported() {
        let r = VerificationReport::exact("x", ParamPoint::default(), "1", "2", 0.0);
        assert!(!r.passed);
        let mut s = Summary::default();
        s.record(&r);
        assert!(!s.all_passed());
    }

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("bogus".parse::<Identity>().is_err());
    }

    #[test]
    fn report_json_omits_unused_coordinates() {
        let r = VerificationReport::exact("x", ParamPoint::ab(2, 2).with_m(1), "1", "1", 0.5);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(
            json["point"],
            serde_json::json!({"alpha": 2, "beta": 2, "m": 1})
        );
        assert_eq!(json["expected"], "1");
        assert!(json.get("tolerance").is_none());
    }
}
