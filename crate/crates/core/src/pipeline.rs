//! End-to-end runs of the degeneracy-locus computations and the gallery of
//! singular elliptic quintics, with self-contained reports.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bott::{resolution_euler_characteristic, w39_locus_resolution, Space};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{
    ideal_intersection, ideal_sum, resolution_hilbert_numerator, saturate, saturate_by_ideal, HilbertData, Ideal,
};
use crate::multilinear::{
    c5w25_matrix, pfaffian_ideal, random_section, w39_matrix, Case, Section, SkewMatrix, SplitMix64,
};
use crate::poly::{parse_polynomial, Polynomial, Ring, TermOrder};

/// Twist of the degree-4 term in the resolution of the codimension-6 locus.
pub const W39_H4_TWIST: i64 = -7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Nongeneric,
}

impl Status {
    /// Process exit code for a report with this status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Nongeneric => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Nongeneric => "NONGENERIC",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub degree: u32,
    pub count: usize,
}

/// Invariants of one ideal computed during a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub name: String,
    pub unit: bool,
    pub codim: i64,
    pub degree: i64,
    pub hilbert_polynomial: String,
    pub hilbert_numerator: String,
    /// Degrees of a minimal generating set.
    pub generator_profile: Vec<DegreeCount>,
    pub groebner_size: usize,
}

impl IdealRecord {
    pub fn from_ideal(name: &str, ideal: &Ideal) -> Result<IdealRecord> {
        let h = ideal.hilbert()?;
        Ok(IdealRecord {
            name: name.to_string(),
            unit: ideal.is_unit(),
            codim: h.codim(),
            degree: h.degree,
            hilbert_polynomial: h.polynomial_string(),
            hilbert_numerator: h.numerator.to_string(),
            generator_profile: ideal
                .degree_profile()?
                .into_iter()
                .map(|(degree, count)| DegreeCount { degree, count })
                .collect(),
            groebner_size: ideal.groebner_basis().len(),
        })
    }

    /// The generator profile as `[(degree, count)]`.
    pub fn profile(&self) -> Vec<(u32, usize)> {
        self.generator_profile.iter().map(|d| (d.degree, d.count)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl Verdict {
    fn compare<T: PartialEq + fmt::Debug>(check: &str, expected: T, observed: T) -> Verdict {
        Verdict {
            check: check.to_string(),
            pass: expected == observed,
            expected: format!("{expected:?}"),
            observed: format!("{observed:?}"),
        }
    }

    fn show<T: PartialEq + fmt::Display>(check: &str, expected: T, observed: T) -> Verdict {
        Verdict {
            check: check.to_string(),
            pass: expected == observed,
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub step: String,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart: Option<usize>,
    pub status: Status,
    pub ideals: Vec<IdealRecord>,
    pub verdicts: Vec<Verdict>,
    /// Informational observations that do not enter the status.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock time per Gröbner-heavy step. Empty unless kept by the
    /// caller, so that reports are byte-for-byte reproducible by default.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub timings: Vec<Timing>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::Unknown { kind: "format", name: s.to_string() }),
        }
    }
}

impl CaseReport {
    pub fn ideal(&self, name: &str) -> Option<&IdealRecord> {
        self.ideals.iter().find(|r| r.name == name)
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => self.to_string(),
        }
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} over F_{}", self.case, self.prime)?;
        if let Some(s) = self.seed {
            write!(f, ", seed {s}")?;
        }
        if let Some(c) = self.chart {
            write!(f, ", chart z_{c}")?;
        }
        writeln!(f, ": {}", self.status)?;
        for r in &self.ideals {
            let profile: Vec<String> =
                r.generator_profile.iter().map(|d| format!("{}x{}", d.count, d.degree)).collect();
            writeln!(
                f,
                "  {:<14} codim {:<3} degree {:<4} HP {:<16} generators [{}]",
                r.name,
                r.codim,
                r.degree,
                r.hilbert_polynomial,
                profile.join(", ")
            )?;
        }
        for v in &self.verdicts {
            let mark = if v.pass { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {}: expected {}, observed {}", v.check, v.expected, v.observed)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for t in &self.timings {
            writeln!(f, "  time {}: {:.1} ms", t.step, t.millis)?;
        }
        Ok(())
    }
}

/// Accumulates records, verdicts and timings for one run.
struct Recorder {
    report: CaseReport,
}

impl Recorder {
    fn new(case: &str, prime: u64, seed: Option<u64>, chart: Option<usize>) -> Recorder {
        Recorder {
            report: CaseReport {
                case: case.to_string(),
                prime,
                seed,
                chart,
                status: Status::Pass,
                ideals: Vec::new(),
                verdicts: Vec::new(),
                notes: Vec::new(),
                timings: Vec::new(),
            },
        }
    }

    fn timed<T>(&mut self, step: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f()?;
        self.report.timings.push(Timing { step: step.to_string(), millis: start.elapsed().as_secs_f64() * 1e3 });
        Ok(out)
    }

    /// Computes the Gröbner basis and invariants of `ideal` under a timer and
    /// stores its record.
    fn record(&mut self, name: &str, ideal: &Ideal) -> Result<IdealRecord> {
        let rec = self.timed(&format!("{name} invariants"), || IdealRecord::from_ideal(name, ideal))?;
        self.report.ideals.push(rec.clone());
        Ok(rec)
    }

    fn verdict(&mut self, v: Verdict) {
        self.report.verdicts.push(v);
    }

    fn note(&mut self, n: String) {
        self.report.notes.push(n);
    }

    fn finish(mut self, on_failure: Status) -> CaseReport {
        self.report.status = if self.report.all_pass() { Status::Pass } else { on_failure };
        self.report
    }
}

fn var_ideal(ring: &Arc<Ring>, vars: &[usize]) -> Result<Ideal> {
    Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i - 1)).collect())
}

fn expect_codim_degree(rec: &mut Recorder, r: &IdealRecord, codim: i64, degree: i64) {
    rec.verdict(Verdict::show(&format!("{} codim", r.name), codim, r.codim));
    rec.verdict(Verdict::show(&format!("{} degree", r.name), degree, r.degree));
}

/// Runs a degeneracy-locus case on the section drawn from `seed`.
///
/// `chart` is the coordinate the Pfaffian ideals are saturated by (and, for
/// three-forms, the index dropped from the matrix); it defaults to the last
/// one. A run whose verdicts fail is reported as [`Status::Nongeneric`].
pub fn run_case(case: Case, prime: u64, seed: u64, chart: Option<usize>) -> Result<CaseReport> {
    let section = random_section(case, seed, prime)?;
    run_section(&section, Some(seed), chart)
}

/// As [`run_case`], for an explicit section.
pub fn run_section(section: &Section, seed: Option<u64>, chart: Option<usize>) -> Result<CaseReport> {
    section.validate()?;
    match section.case {
        Case::C5w25 => run_c5w25(section, seed, chart.unwrap_or(5)),
        Case::W39 => run_w39(section, seed, chart.unwrap_or(9)),
        Case::C3c3c3 => run_c3c3c3(section, seed, chart.unwrap_or(9)),
    }
}

fn run_c5w25(section: &Section, seed: Option<u64>, chart: usize) -> Result<CaseReport> {
    if !(1..=5).contains(&chart) {
        return Err(Error::Usage(format!("chart index {chart} outside 1..=5")));
    }
    let mut rec = Recorder::new("c5w25", section.prime, seed, Some(chart));
    let m = c5w25_matrix(section)?;
    let ring = m.ring().clone();
    let pf = rec.timed("4x4 Pfaffians", || pfaffian_ideal(&m, 4))?;
    let ideal = rec.timed("saturate I", || saturate(&pf, &Polynomial::var(&ring, chart - 1)))?;
    let r = rec.record("I", &ideal)?;
    expect_codim_degree(&mut rec, &r, 3, 5);
    rec.verdict(Verdict::show("I Hilbert polynomial", "5t", &r.hilbert_polynomial));
    // Resolution 0 <- R <- R(-2)^5 <- R(-3)^5 <- R(-5) <- 0.
    let predicted = resolution_hilbert_numerator(&[(1, 0, 0), (5, 2, 1), (5, 3, 2), (1, 5, 3)]);
    rec.verdict(Verdict::show("I Hilbert numerator", predicted.to_string(), r.hilbert_numerator.clone()));
    rec.verdict(Verdict::compare("I generators", vec![(2, 5)], r.profile()));
    if !pf.same_ideal(&ideal) {
        rec.note(format!("saturation by z_{chart} changed the Pfaffian ideal"));
    }
    Ok(rec.finish(Status::Nongeneric))
}

/// The saturated Pfaffian ideals `I, J, K` of sizes 8, 6, 4.
fn three_form_ideals(rec: &mut Recorder, m: &SkewMatrix, chart: usize) -> Result<[Ideal; 3]> {
    let z = Polynomial::var(m.ring(), chart - 1);
    let mut out = Vec::with_capacity(3);
    for (name, size) in [("I", 8), ("J", 6), ("K", 4)] {
        let pf = rec.timed(&format!("{size}x{size} Pfaffians"), || pfaffian_ideal(m, size))?;
        out.push(rec.timed(&format!("saturate {name}"), || saturate(&pf, &z))?);
    }
    Ok(out.try_into().expect("three ideals"))
}

fn check_chart(chart: usize) -> Result<()> {
    if !(1..=9).contains(&chart) {
        return Err(Error::Usage(format!("chart index {chart} outside 1..=9")));
    }
    Ok(())
}

fn run_w39(section: &Section, seed: Option<u64>, chart: usize) -> Result<CaseReport> {
    check_chart(chart)?;
    let mut rec = Recorder::new("w39", section.prime, seed, Some(chart));
    let v = section.to_alternating()?;
    let m = w39_matrix(&v, chart)?;
    let [i, j, k] = three_form_ideals(&mut rec, &m, chart)?;
    let ri = rec.record("I", &i)?;
    rec.verdict(Verdict::compare("I generators", vec![(3, 1)], ri.profile()));
    let rj = rec.record("J", &j)?;
    expect_codim_degree(&mut rec, &rj, 6, 18);
    let rk = rec.record("K", &k)?;
    rec.verdict(Verdict::show("K is the unit ideal", true, rk.unit));

    // χ(O_X(t)) from the locally free resolution against the Hilbert polynomial of J.
    let h = j.hilbert()?;
    let terms = w39_locus_resolution(W39_H4_TWIST);
    let space = Space::A { n: 9 };
    let mut chi = Vec::new();
    let mut hp = Vec::new();
    for t in -3..=4 {
        chi.push(resolution_euler_characteristic(space, &terms, t)?.to_string());
        hp.push(h.polynomial_value(t).to_string());
    }
    rec.verdict(Verdict::compare("J Hilbert polynomial = χ(O_X(t)), t = -3..4", chi, hp));
    Ok(rec.finish(Status::Nongeneric))
}

const BLOCKS: [[usize; 3]; 3] = [[1, 2, 3], [4, 5, 6], [7, 8, 9]];

fn block_of(i: usize) -> usize {
    (i - 1) / 3
}

/// The component of `j` inside the zero set of `BLOCKS[keep]`, isolated by
/// saturating away the other two coordinate blocks.
fn isolate_component(j: &Ideal, keep: usize) -> Result<Ideal> {
    let mut c = j.clone();
    for (b, vars) in BLOCKS.iter().enumerate() {
        if b != keep {
            c = saturate_by_ideal(&c, &var_ideal(j.ring(), vars)?)?;
        }
    }
    Ok(c)
}

fn run_c3c3c3(section: &Section, seed: Option<u64>, chart: usize) -> Result<CaseReport> {
    check_chart(chart)?;
    let mut rec = Recorder::new("c3c3c3", section.prime, seed, Some(chart));
    let v = section.to_alternating()?;
    let m = w39_matrix(&v, chart)?;
    let ring = m.ring().clone();
    let [_, j, _] = three_form_ideals(&mut rec, &m, chart)?;
    let rj = rec.record("J", &j)?;
    expect_codim_degree(&mut rec, &rj, 6, 12);

    // The component inside the chart's own block is invisible; the other
    // two blocks each carry one visible component.
    let hidden = block_of(chart);
    let visible: Vec<usize> = (0..3).filter(|&b| b != hidden).collect();
    let mut comps = Vec::new();
    for &b in &visible {
        let name = format!("J[z_{}..z_{}=0]", BLOCKS[b][0], BLOCKS[b][2]);
        let c = rec.timed(&format!("isolate {name}"), || isolate_component(&j, b))?;
        let rc = rec.record(&name, &c)?;
        rec.verdict(Verdict::show(&format!("{name} codim"), 6, rc.codim));
        let inside =
            BLOCKS[b].iter().map(|&x| c.contains(&Polynomial::var(&ring, x - 1))).collect::<Result<Vec<_>>>()?;
        rec.verdict(Verdict::show(
            &format!("{name} lies in z_{}=z_{}=z_{}=0", BLOCKS[b][0], BLOCKS[b][1], BLOCKS[b][2]),
            true,
            inside.iter().all(|&x| x),
        ));
        comps.push((c, rc));
    }
    let visible_count = comps.iter().filter(|(_, r)| !r.unit && r.degree > 0).count();
    rec.verdict(Verdict::show("visible components", 2, visible_count));
    let total: i64 = comps.iter().map(|(_, r)| r.degree).sum();
    rec.verdict(Verdict::show("total degree of components", 12, total));
    rec.verdict(Verdict::show("components account for deg J", rj.degree, total));

    let meet = rec.timed("intersect components", || ideal_intersection(&comps[0].0, &comps[1].0))?;
    rec.verdict(Verdict::show("J equals the intersection of the components", true, meet.same_ideal(&j)));
    let sum = rec.timed("sum of components", || ideal_sum(&comps[0].0, &comps[1].0))?;
    let rs = rec.record("meet", &sum)?;
    rec.verdict(Verdict::compare("meet generators", vec![(1, 6), (3, 1)], rs.profile()));

    // Chart swap: the component hidden in this chart becomes visible in a
    // chart from another block. Informational only.
    let other_chart = BLOCKS[(hidden + 1) % 3][0];
    let m2 = w39_matrix(&v, other_chart)?;
    let z2 = Polynomial::var(&ring, other_chart - 1);
    let j2 = rec.timed("J in swapped chart", || saturate(&pfaffian_ideal(&m2, 6)?, &z2))?;
    let third = rec.timed("isolate hidden component", || isolate_component(&j2, hidden))?;
    let h: HilbertData = third.hilbert()?;
    rec.note(format!(
        "chart z_{other_chart}: component in z_{}=z_{}=z_{}=0 has codim {}, degree {} (6 expected)",
        BLOCKS[hidden][0],
        BLOCKS[hidden][1],
        BLOCKS[hidden][2],
        h.codim(),
        h.degree
    ));
    Ok(rec.finish(Status::Nongeneric))
}

/// The gallery of singular elliptic quintics in `P^4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Example {
    Nodal,
    Triangle,
    Pentagon,
    Nonreduced,
    Cuspidal,
}

impl Example {
    pub const ALL: [Example; 5] =
        [Example::Nodal, Example::Triangle, Example::Pentagon, Example::Nonreduced, Example::Cuspidal];

    pub fn name(self) -> &'static str {
        match self {
            Example::Nodal => "nodal",
            Example::Triangle => "triangle",
            Example::Pentagon => "pentagon",
            Example::Nonreduced => "nonreduced",
            Example::Cuspidal => "cuspidal",
        }
    }

    /// The `5×5` skew matrix of linear forms in `z_1..z_5`.
    pub fn matrix(self) -> [[&'static str; 5]; 5] {
        match self {
            Example::Nodal => [
                ["0", "z_5", "z_1", "z_2", "z_3"],
                ["-z_5", "0", "z_2", "z_3", "z_4"],
                ["-z_1", "-z_2", "0", "z_4", "z_5"],
                ["-z_2", "-z_3", "-z_4", "0", "0"],
                ["-z_3", "-z_4", "-z_5", "0", "0"],
            ],
            Example::Triangle => [
                ["0", "0", "z_4", "z_3", "z_2"],
                ["0", "0", "0", "z_2", "z_1"],
                ["-z_4", "0", "0", "0", "-z_5"],
                ["-z_3", "-z_2", "0", "0", "-z_4"],
                ["-z_2", "-z_1", "z_5", "z_4", "0"],
            ],
            Example::Pentagon => [
                ["0", "z_1", "z_2", "0", "0"],
                ["-z_1", "0", "0", "z_3", "0"],
                ["-z_2", "0", "0", "0", "z_4"],
                ["0", "-z_3", "0", "0", "z_5"],
                ["0", "0", "-z_4", "-z_5", "0"],
            ],
            Example::Nonreduced => [
                ["0", "0", "z_5", "z_3", "z_2"],
                ["0", "0", "0", "z_2", "z_1"],
                ["-z_5", "0", "0", "z_4", "z_3"],
                ["-z_3", "-z_2", "-z_4", "0", "0"],
                ["-z_2", "-z_1", "-z_3", "0", "0"],
            ],
            Example::Cuspidal => [
                ["0", "z_1", "z_4", "0", "z_5"],
                ["-z_1", "0", "0", "z_5", "z_2"],
                ["-z_4", "0", "0", "z_2", "z_3"],
                ["0", "-z_5", "-z_2", "0", "z_4"],
                ["-z_5", "-z_2", "-z_3", "-z_4", "0"],
            ],
        }
    }

    pub fn skew_matrix(self, prime: u64) -> Result<SkewMatrix> {
        let ring = Ring::standard(prime, 5)?;
        let m = self.matrix();
        let rows: Vec<&[&str]> = m.iter().map(|r| &r[..]).collect();
        SkewMatrix::parse(&ring, &rows)
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Example> {
        Example::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "example", name: s.to_string() })
    }
}

/// A square root of `-1` in `F_p`, when `p ≡ 1 (mod 4)`.
fn sqrt_minus_one(field: PrimeField) -> Option<u64> {
    let p = field.modulus();
    if p % 4 != 1 {
        return None;
    }
    (2..p).find_map(|n| {
        let x = field.pow(n, (p - 1) / 4);
        (field.mul(x, x) == p - 1).then_some(x)
    })
}

/// A curve `[a:b] ↦ [f_1(a,b) : ... : f_5(a,b)]`.
struct Parametrization {
    ring: Arc<Ring>,
    coords: Vec<Polynomial>,
}

impl Parametrization {
    fn new(prime: u64, coords: &[&str]) -> Result<Parametrization> {
        let ring = Ring::new(PrimeField::new(prime)?, vec!["a".into(), "b".into()], TermOrder::DegRevLex)?;
        let coords = coords.iter().map(|c| parse_polynomial(&ring, c)).collect::<Result<_>>()?;
        Ok(Parametrization { ring, coords })
    }

    fn point(&self, a: u64, b: u64) -> Result<Vec<u64>> {
        self.coords.iter().map(|c| c.eval(&[a, b])).collect()
    }

    /// Whether every generator vanishes at the images of `samples` random
    /// parameter values.
    fn lies_on(&self, ideal: &Ideal, rng: &mut SplitMix64, samples: usize) -> Result<bool> {
        let p = self.ring.field().modulus();
        for _ in 0..samples {
            let (a, b) = (rng.next_u64() % p, rng.next_u64() % p);
            if !vanishes_at(ideal, &self.point(a, b)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn vanishes_at(ideal: &Ideal, point: &[u64]) -> Result<bool> {
    for g in ideal.generators() {
        if g.eval(point)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

const PARAM_SAMPLES: usize = 5;
const GALLERY_SEED: u64 = 0x5eed_0005;

/// Runs one example of the gallery over `F_prime`: the `4×4` Pfaffians
/// saturated by the irrelevant ideal, with the Hilbert polynomial `5t`
/// expected, plus example-specific membership checks.
pub fn example_gallery(example: Example, prime: u64) -> Result<CaseReport> {
    let mut rec = Recorder::new(example.name(), prime, None, None);
    let m = example.skew_matrix(prime)?;
    let ring = m.ring().clone();
    let pf = rec.timed("4x4 Pfaffians", || pfaffian_ideal(&m, 4))?;
    let irrelevant = var_ideal(&ring, &[1, 2, 3, 4, 5])?;
    let ideal = rec.timed("saturate I", || saturate_by_ideal(&pf, &irrelevant))?;
    let r = rec.record("I", &ideal)?;
    rec.verdict(Verdict::show("I Hilbert polynomial", "5t", &r.hilbert_polynomial));
    rec.verdict(Verdict::show("I degree", 5, r.degree));
    let mut rng = SplitMix64::new(GALLERY_SEED);
    let param = |coords: &[&str]| Parametrization::new(prime, coords);
    match example {
        Example::Nodal => {
            rec.verdict(Verdict::show("node [1:0:0:0:0] on the curve", true, vanishes_at(&ideal, &[1, 0, 0, 0, 0])?));
            let c = param(&["a^5 + b^5", "a*b^4", "a^2*b^3", "a^3*b^2", "a^4*b"])?;
            rec.verdict(Verdict::show(
                "parametrization on the curve",
                true,
                c.lies_on(&ideal, &mut rng, PARAM_SAMPLES)?,
            ));
        }
        Example::Triangle => {
            let parts = [
                ("conic [a^2:ab:b^2:0:0]", ["a^2", "a*b", "b^2", "0", "0"]),
                ("conic [0:0:a^2:ab:b^2]", ["0", "0", "a^2", "a*b", "b^2"]),
                ("line [a:0:0:0:b]", ["a", "0", "0", "0", "b"]),
            ];
            for (name, coords) in parts {
                let on = param(&coords)?.lies_on(&ideal, &mut rng, PARAM_SAMPLES)?;
                rec.verdict(Verdict::show(&format!("{name} on the curve"), true, on));
            }
        }
        Example::Pentagon => pentagon_checks(&mut rec, &ideal, &mut rng)?,
        Example::Nonreduced => {
            let c = param(&["a^3", "a^2*b", "a*b^2", "b^3", "0"])?;
            rec.verdict(Verdict::show("twisted cubic on the curve", true, c.lies_on(&ideal, &mut rng, PARAM_SAMPLES)?));
            let z = |i: usize| Polynomial::var(&ring, i - 1);
            let line = Ideal::new(&ring, vec![z(1), z(2), z(3).pow(2)])?;
            let cubic_gens = ["z_1*z_3 - z_2^2", "z_1*z_4 - z_2*z_3", "z_2*z_4 - z_3^2", "z_5"]
                .iter()
                .map(|s| parse_polynomial(&ring, s))
                .collect::<Result<Vec<_>>>()?;
            let cubic = Ideal::new(&ring, cubic_gens)?;
            let union = rec.timed("cubic ∩ double line", || ideal_intersection(&cubic, &line))?;
            rec.verdict(Verdict::show("I = (twisted cubic) ∩ (z_1, z_2, z_3^2)", true, union.same_ideal(&ideal)));
        }
        Example::Cuspidal => {
            rec.verdict(Verdict::show("cusp [0:0:1:0:0] on the curve", true, vanishes_at(&ideal, &[0, 0, 1, 0, 0])?));
            match sqrt_minus_one(ring.field()) {
                Some(i) => {
                    let coords =
                        [format!("{i}*b^5"), "a^3*b^2".into(), "a^5".into(), format!("{i}*a^2*b^3"), "a*b^4".into()];
                    let refs: Vec<&str> = coords.iter().map(String::as_str).collect();
                    let on = param(&refs)?.lies_on(&ideal, &mut rng, PARAM_SAMPLES)?;
                    rec.verdict(Verdict::show("parametrization on the curve", true, on));
                }
                None => rec.note(format!("-1 is not a square mod {prime}; parametrization check skipped")),
            }
        }
    }
    Ok(rec.finish(Status::Fail))
}

/// The pentagon is the union of five coordinate lines whose incidence graph
/// is a 5-cycle; every point of the locus has at least three zero coordinates.
fn pentagon_checks(rec: &mut Recorder, ideal: &Ideal, rng: &mut SplitMix64) -> Result<()> {
    let ring = ideal.ring().clone();
    let p = ring.field().modulus();
    let mut lines = Vec::new();
    for x in 0..5 {
        for y in x + 1..5 {
            let mut on = true;
            for _ in 0..PARAM_SAMPLES {
                let mut pt = vec![0; 5];
                pt[x] = rng.next_u64() % p;
                pt[y] = rng.next_u64() % p;
                on &= vanishes_at(ideal, &pt)?;
            }
            if on {
                lines.push((x, y));
            }
        }
    }
    let listed: Vec<String> = lines.iter().map(|(x, y)| format!("z_{}z_{}", x + 1, y + 1)).collect();
    rec.verdict(Verdict::show("coordinate lines on the curve", 5, lines.len()));
    rec.verdict(Verdict::show("lines form a 5-cycle", true, is_five_cycle(&lines)));
    let mut union = Ideal::unit(&ring);
    for &(x, y) in &lines {
        let others: Vec<usize> = (1..=5).filter(|&i| i != x + 1 && i != y + 1).collect();
        union = ideal_intersection(&union, &var_ideal(&ring, &others)?)?;
    }
    rec.verdict(Verdict::show("I = intersection of the line ideals", true, union.same_ideal(ideal)));
    rec.note(format!("lines on the locus: {}", listed.join(", ")));
    Ok(())
}

fn is_five_cycle(edges: &[(usize, usize)]) -> bool {
    if edges.len() != 5 {
        return false;
    }
    let mut deg = [0; 5];
    for &(x, y) in edges {
        deg[x] += 1;
        deg[y] += 1;
    }
    if deg.iter().any(|&d| d != 2) {
        return false;
    }
    // Walk from vertex 0; a 2-regular graph on 5 vertices is a single cycle
    // iff the walk visits all of them.
    let (mut prev, mut cur, mut seen) = (usize::MAX, 0, 1);
    loop {
        let next = edges
            .iter()
            .find_map(|&(x, y)| match (x == cur, y == cur) {
                (true, _) if y != prev => Some(y),
                (_, true) if x != prev => Some(x),
                _ => None,
            })
            .expect("2-regular");
        if next == 0 {
            return seen == 5;
        }
        prev = cur;
        cur = next;
        seen += 1;
    }
}
