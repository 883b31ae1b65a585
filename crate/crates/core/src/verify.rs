//! Verification commands. Each one recomputes the facts behind a claim about
//! unit groups and returns a [`VerificationReport`] with a verdict.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::findex::{index_group, PermGroup};
use crate::galg::{frobenius_power_of_commuting_sum, AlgebraElement};
use crate::ideal::{sigma_candidates, Ideal};
use crate::perm::{
    alternating_generators, alternating_group, centralizer_of_set, generated_subgroup, normalizer_of_set,
    order_spectrum, parse_cycles, symmetric_generators, symmetric_group, PermSet, Permutation,
};
use crate::quotient::QuotientRing;
use crate::rings::{a8_identification, hurwitz_mod2, matrix_ring, quotient_iso_by_conjugacy, unit_spanned_iso};

const CLAIMS: &str = include_str!("../fixtures/claims.txt");
const ORDER_12_GROUPS: &str = include_str!("../fixtures/order12_groups.txt");

/// Smallest and largest degree accepted by [`cmd_sn`] and [`cmd_an`].
pub const MIN_FAMILY_DEGREE: usize = 5;
pub const MAX_FAMILY_DEGREE: usize = 9;

/// Above this degree the full ideal closure cross-check is skipped.
pub const CLOSURE_CHECK_MAX_DEGREE: usize = 7;

const H1: &str = "e + (1,2) + (1,3) + (2,3) + (1,2,3) + (1,3,2)";
const H2: &str = "e + (1,2,3) + (1,3,2)";
const S4_T: &str = "e + (2,4) + (1,2)(3,4)";
const S4_T_INVERSE: &str = "e + (1,2,3,4) + (1,4,3,2) + (1,4)(2,3) + (1,3)";
const J1_GEN: &str = "e + (2,4) + (1,2)(3,4) + (1,2,3,4)";
const J2_GEN: &str = "e + (2,4) + (1,2)(3,4) + (1,4,3,2)";
const A4_GENS: [&str; 2] = ["e + (1,2)(3,4) + (1,3)(2,4) + (1,4)(2,3)", "e + (1,3,2) + (1,2)(3,4) + (1,4,3)"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The method is expected to break down here; every supporting fact held.
    Obstructed,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        self != Verdict::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub section: String,
    pub quote: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fact {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    pub observed: Value,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub anchor: Anchor,
    pub inputs: Value,
    pub facts: Vec<Fact>,
    pub verdict: Verdict,
    pub ms: u64,
}

impl VerificationReport {
    pub fn fact(&self, name: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.name == name)
    }

    pub fn failed_facts(&self) -> impl Iterator<Item = &Fact> {
        self.facts.iter().filter(|f| !f.ok)
    }
}

/// One entry of the bundled claim registry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub anchor: Anchor,
}

pub fn claims() -> Vec<Claim> {
    CLAIMS
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.splitn(3, '|').map(str::trim).collect();
            assert_eq!(parts.len(), 3, "claim registry line {l:?}");
            Claim {
                id: parts[0].to_string(),
                anchor: Anchor { section: parts[1].to_string(), quote: parts[2].to_string() },
            }
        })
        .collect()
}

fn anchor(claim: &str) -> Anchor {
    claims().into_iter().find(|c| c.id == claim).map(|c| c.anchor).expect("claim is registered")
}

/// Collects facts and turns them into a report.
struct Recorder {
    claim: &'static str,
    id: String,
    inputs: Value,
    facts: Vec<Fact>,
    start: Instant,
}

impl Recorder {
    fn new(claim: &'static str, id: impl Into<String>, inputs: Value) -> Self {
        Recorder { claim, id: id.into(), inputs, facts: Vec::new(), start: Instant::now() }
    }

    fn check<T: Serialize + PartialEq>(&mut self, name: &str, expected: T, observed: T) -> bool {
        let ok = expected == observed;
        self.facts.push(Fact {
            name: name.to_string(),
            expected: Some(to_value(&expected)),
            observed: to_value(&observed),
            ok,
        });
        ok
    }

    fn require(&mut self, name: &str, observed: bool) -> bool {
        self.check(name, true, observed)
    }

    fn note<T: Serialize>(&mut self, name: &str, observed: T) {
        self.facts.push(Fact { name: name.to_string(), expected: None, observed: to_value(&observed), ok: true });
    }

    fn finish(self, obstructed: bool) -> VerificationReport {
        let verdict = match (self.facts.iter().all(|f| f.ok), obstructed) {
            (false, _) => Verdict::Fail,
            (true, false) => Verdict::Pass,
            (true, true) => Verdict::Obstructed,
        };
        VerificationReport {
            id: self.id,
            anchor: anchor(self.claim),
            inputs: self.inputs,
            facts: self.facts,
            verdict,
            ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("facts serialize")
}

fn texts<'a, T: ToString + 'a>(items: impl IntoIterator<Item = &'a T>) -> Vec<String> {
    items.into_iter().map(ToString::to_string).collect()
}

fn perm(text: &str, n: usize) -> Result<Permutation> {
    parse_cycles(text, n)
}

fn element(g: &Arc<PermGroup>, text: &str) -> Result<AlgebraElement> {
    AlgebraElement::parse(g, text)
}

fn close(g: &Arc<PermGroup>, group_gens: &[Permutation], gens: &[&str]) -> Result<Ideal> {
    let gens = gens.iter().map(|t| element(g, t)).collect::<Result<Vec<_>>>()?;
    Ideal::close(g, group_gens, &gens)
}

/// Runs `f`, turning an internal error into a failing report.
fn guarded(claim: &'static str, id: &str, f: impl FnOnce() -> Result<VerificationReport>) -> VerificationReport {
    let start = Instant::now();
    f().unwrap_or_else(|e| {
        let mut rec = Recorder::new(claim, id, Value::Null);
        rec.check("completed without error", String::new(), e.to_string());
        let mut report = rec.finish(false);
        report.ms = start.elapsed().as_millis() as u64;
        report
    })
}

/// No quotient of F2[C5] has exactly 5 units.
///
/// Every ideal of the commutative algebra F2[C5] is principal, so closing
/// the ideal of each of its 32 elements reaches every quotient.
pub fn cmd_c5() -> Result<VerificationReport> {
    let tau = Permutation::cycle(5, &[0, 1, 2, 3, 4])?;
    let c5 = generated_subgroup(&[tau])?;
    let g = Arc::new(index_group(&c5, false)?);
    let mut rec = Recorder::new("c5", "c5", json!({ "group": "C5", "generator": tau.to_string() }));

    let mut ideals: Vec<Ideal> = Vec::new();
    for mask in 0..32usize {
        let x = AlgebraElement::from_subset(&g, (0..5).filter(|i| mask >> i & 1 == 1))?;
        let ideal = Ideal::close(&g, &[tau], &[x])?;
        if !ideals.iter().any(|j| j.same_span(&ideal)) {
            ideals.push(ideal);
        }
    }
    let mut quotients = Vec::new();
    for ideal in &ideals {
        let q = QuotientRing::build(ideal)?;
        quotients.push((ideal.dim(), q.size(), q.to_table().units().len()));
    }
    quotients.sort_unstable();
    let counts: Vec<usize> = quotients.iter().map(|q| q.2).collect();
    rec.check("distinct ideals", 4, ideals.len());
    rec.note(
        "quotients",
        quotients
            .iter()
            .map(|&(dim, size, units)| json!({ "ideal_dim": dim, "ring_size": size, "units": units }))
            .collect::<Vec<_>>(),
    );
    rec.require("no quotient has exactly 5 units", counts.iter().all(|&u| u != 5));
    rec.require("every quotient with more than one unit has at least 15", counts.iter().all(|&u| u <= 1 || u >= 15));
    rec.check("units of F2[C5]", 15, quotients[0].2);
    Ok(rec.finish(false))
}

pub fn cmd_s3() -> Result<VerificationReport> {
    let s3 = symmetric_group(3)?;
    let g = Arc::new(index_group(&s3, false)?);
    let gens = symmetric_generators(3);
    let mut rec =
        Recorder::new("s3", "s3", json!({ "group": "S3", "group_generators": texts(&gens), "H1": H1, "H2": H2 }));

    let h1 = element(&g, H1)?;
    let one = AlgebraElement::one(&g);
    rec.require("H1^2 = 0", (&h1 * &h1).is_zero());
    let t = &h1 + &one;
    rec.require("(H1 + e)^2 = e", &t * &t == one);

    let t_set = PermSet::new(3, t.terms())?;
    rec.check("normalizer of T = S3 \\ {e}", 6, normalizer_of_set(&s3, &t_set)?.len());
    rec.check("sigma candidates for T", vec!["e".to_string()], texts(sigma_candidates(&s3, &t_set)?.members()));

    let i1 = close(&g, &gens, &[H1])?;
    let i2 = close(&g, &gens, &[H2])?;
    for (name, ideal, size) in [("F2[S3]/(H1)", &i1, 32u64), ("F2[S3]/(H2)", &i2, 16)] {
        let report = QuotientRing::build(ideal)?.unit_report()?;
        rec.check(&format!("{name} size"), size, report.ring_size);
        rec.check(&format!("{name} units"), 6, report.unit_count);
        rec.require(&format!("{name} identity criterion"), report.identity_criterion);
    }
    rec.require("(H2) contains H1", i2.contains(&h1)?);

    let r2 = QuotientRing::build(&i2)?.to_table();
    let iso = unit_spanned_iso(&r2, &matrix_ring(2)?)?;
    rec.require("F2[S3]/(H2) is isomorphic to M2(F2)", iso.is_some());
    if let Some(iso) = iso {
        rec.note("isomorphism columns", iso.columns);
    }
    Ok(rec.finish(false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Symmetric,
    Alternating,
}

impl Family {
    fn claim(self) -> &'static str {
        match self {
            Family::Symmetric => "sn",
            Family::Alternating => "an",
        }
    }

    fn name(self, n: usize) -> String {
        match self {
            Family::Symmetric => format!("S{n}"),
            Family::Alternating => format!("A{n}"),
        }
    }

    fn group(self, n: usize) -> Result<PermSet> {
        match self {
            Family::Symmetric => symmetric_group(n),
            Family::Alternating => alternating_group(n),
        }
    }

    fn generators(self, n: usize) -> Vec<Permutation> {
        match self {
            Family::Symmetric => symmetric_generators(n),
            Family::Alternating => alternating_generators(n),
        }
    }

    /// The full symmetric or alternating group on the points 6..n.
    fn tail(self, n: usize) -> Result<PermSet> {
        let mut gens = vec![Permutation::identity(n)];
        for a in 5..n {
            for b in a + 1..n {
                match self {
                    Family::Symmetric => gens.push(Permutation::transposition(n, a, b)?),
                    Family::Alternating => {
                        for c in b + 1..n {
                            gens.push(Permutation::cycle(n, &[a, b, c])?);
                        }
                    }
                }
            }
        }
        generated_subgroup(&gens)
    }
}

fn check_degree(n_max: usize) -> Result<()> {
    if (MIN_FAMILY_DEGREE..=MAX_FAMILY_DEGREE).contains(&n_max) {
        Ok(())
    } else {
        Err(Error::DegreeBound { degree: n_max, bound: MAX_FAMILY_DEGREE })
    }
}

/// The certificate for one degree: the unit `T = e + t^2 + t^3` with
/// `t = (1,2,3,4,5)` must be congruent to some `σ` in the centralizer of the
/// normalizer of `{e, t^2, t^3}`, and each such `σ` yields a weight-2 element
/// of the ideal.
fn family_report(family: Family, n: usize) -> Result<VerificationReport> {
    let g = family.group(n)?;
    let group_gens = family.generators(n);
    let tau = Permutation::cycle(n, &[0, 1, 2, 3, 4])?;
    let e = Permutation::identity(n);
    let t_set = PermSet::new(n, [e, tau.pow(2), tau.pow(3)])?;
    let mut rec = Recorder::new(
        family.claim(),
        format!("{}/{n}", family.claim()),
        json!({
            "group": family.name(n),
            "group_generators": texts(&group_gens),
            "tau": tau.to_string(),
            "T": texts(t_set.members()),
        }),
    );

    // T is a unit of order 3 already inside F2[<t>]
    let cyclic = Arc::new(index_group(&generated_subgroup(&[tau])?, false)?);
    let t_unit = AlgebraElement::from_perms(&cyclic, t_set.members())?;
    rec.require("T^3 = e", t_unit.power(3) == AlgebraElement::one(&cyclic));
    let expected_inverse = AlgebraElement::from_perms(&cyclic, &[e, tau, tau.pow(4)])?;
    rec.check("inverse of T", Some(expected_inverse.to_string()), t_unit.inverse()?.map(|x| x.to_string()));

    let normalizer = normalizer_of_set(&g, &t_set)?;
    let tail = family.tail(n)?;
    let mut d5_tail = vec![tau, perm("(2,5)(3,4)", n)?];
    d5_tail.extend(tail.iter().copied());
    rec.check("normalizer order", 10 * tail.len(), normalizer.len());
    rec.require("normalizer = D5 x tail", normalizer == generated_subgroup(&d5_tail)?);

    let candidates = sigma_candidates(&g, &t_set)?;
    let expected: Vec<String> = match (family, n) {
        (Family::Symmetric, 7) => vec!["e".into(), "(6,7)".into()],
        (Family::Alternating, 8) => {
            let s = perm("(6,7,8)", 8)?;
            let mut v = vec![e, s, s.pow(2)];
            v.sort();
            texts(&v)
        }
        _ => vec!["e".into()],
    };
    rec.check("sigma candidates", expected, texts(candidates.members()));
    rec.require("candidates = center of the tail factor", candidates == centralizer_of_set(&tail, &tail)?);

    // (T + σ)^16 = T^16 + σ^16 when everything commutes; 16 ≡ 1 mod 5
    let mut obstructed = false;
    let mut per_candidate = Vec::new();
    for sigma in candidates.iter() {
        let terms = [e, tau.pow(2), tau.pow(3), *sigma];
        let power = frobenius_power_of_commuting_sum(&terms, 4)?;
        let contradiction = power.len() == 2;
        let mut sorted = terms.to_vec();
        sorted.sort();
        let unchanged = power == sorted;
        if !contradiction {
            obstructed = true;
            rec.require(&format!("sixteenth power of T + {sigma} is unchanged"), unchanged);
        }
        per_candidate.push(json!({
            "sigma": sigma.to_string(),
            "order": sigma.order(),
            "sixteenth_power": texts(&power),
            "weight_two": contradiction,
        }));
    }
    rec.note("candidate analysis", per_candidate);
    let all_contradict = !obstructed;
    let expect_obstruction = family == Family::Alternating && n == 8;
    rec.check("every candidate yields a weight-2 element", !expect_obstruction, all_contradict);

    if n <= CLOSURE_CHECK_MAX_DEGREE {
        let group = Arc::new(index_group(&g, n >= 7)?);
        let mut witnesses = Vec::new();
        for sigma in candidates.iter() {
            let x = AlgebraElement::from_perms(&group, &[e, tau.pow(2), tau.pow(3)])?;
            let x = &x + &AlgebraElement::from_perms(&group, &[*sigma])?;
            let ideal = Ideal::close(&group, &group_gens, &[x])?;
            let w = ideal.weight2_witness();
            rec.require(&format!("closure of T + {sigma} has a weight-2 element"), w.is_some());
            witnesses.push(json!({
                "sigma": sigma.to_string(),
                "ideal_dim": ideal.dim(),
                "witness": w.map(|(a, b)| [a.to_string(), b.to_string()]),
            }));
        }
        rec.note("closure cross-check", witnesses);
    }
    Ok(rec.finish(expect_obstruction))
}

fn family_reports(family: Family, n_max: usize) -> Result<Vec<VerificationReport>> {
    check_degree(n_max)?;
    Ok((MIN_FAMILY_DEGREE..=n_max)
        .map(|n| guarded(family.claim(), &format!("{}/{n}", family.claim()), || family_report(family, n)))
        .collect())
}

/// The `Sn` certificate for a single degree in `5..=9`.
pub fn sn_certificate(n: usize) -> Result<VerificationReport> {
    check_degree(n)?;
    family_report(Family::Symmetric, n)
}

/// The `An` certificate for a single degree in `5..=9`.
pub fn an_certificate(n: usize) -> Result<VerificationReport> {
    check_degree(n)?;
    family_report(Family::Alternating, n)
}

/// One report per degree `5..=n_max`.
pub fn cmd_sn(n_max: usize) -> Result<Vec<VerificationReport>> {
    family_reports(Family::Symmetric, n_max)
}

/// One report per degree `5..=n_max`; degree 8 comes out as obstructed.
pub fn cmd_an(n_max: usize) -> Result<Vec<VerificationReport>> {
    family_reports(Family::Alternating, n_max)
}

pub fn cmd_s4() -> Result<VerificationReport> {
    let s4 = symmetric_group(4)?;
    let g = Arc::new(index_group(&s4, false)?);
    let gens = symmetric_generators(4);
    let mut rec = Recorder::new(
        "s4",
        "s4",
        json!({
            "group": "S4",
            "group_generators": texts(&gens),
            "J1": [J1_GEN, H1],
            "J2": [J2_GEN, H1],
        }),
    );
    let one = AlgebraElement::one(&g);

    // every copy of S3 is a point stabilizer
    let mut copies = Vec::new();
    for point in 0..4 {
        let h = PermSet::new(4, s4.iter().copied().filter(|p| p.apply(point) == point))?;
        let hx = AlgebraElement::from_perms(&g, h.members())?;
        let t_set = PermSet::new(4, h.iter().copied().filter(|p| !p.is_identity()))?;
        let candidates = texts(sigma_candidates(&s4, &t_set)?.members());
        let ok = (&hx * &hx).is_zero() && (&hx + &one).power(2) == one && candidates == ["e"];
        rec.require(&format!("copy of S3 fixing {}", point + 1), ok);
        copies.push(json!({ "fixed_point": point + 1, "sigma_candidates": candidates }));
    }
    rec.note("S3 copies", copies);

    let t = element(&g, S4_T)?;
    rec.check("inverse of T", Some(element(&g, S4_T_INVERSE)?.to_string()), t.inverse()?.map(|x| x.to_string()));
    rec.require("T has order 4", t.power(4) == one && t.power(2) != one);

    let h1 = element(&g, H1)?;
    let mut survivors = Vec::new();
    for sigma in s4.iter() {
        let x = &t + &AlgebraElement::from_perms(&g, &[*sigma])?;
        if Ideal::close(&g, &gens, &[x, h1.clone()])?.weight2_witness().is_none() {
            survivors.push(sigma.to_string());
        }
    }
    rec.check("sigma survivors", vec!["(1,2,3,4)".to_string(), "(1,4,3,2)".to_string()], survivors);

    let j1 = close(&g, &gens, &[J1_GEN, H1])?;
    let j2 = close(&g, &gens, &[J2_GEN, H1])?;
    let r1 = QuotientRing::build(&j1)?;
    let r2 = QuotientRing::build(&j2)?;
    for (name, r) in [("R1", &r1), ("R2", &r2)] {
        let report = r.unit_report()?;
        rec.check(&format!("{name} size"), 128, report.ring_size);
        rec.check(&format!("{name} units"), 24, report.unit_count);
        rec.require(&format!("{name} identity criterion"), report.identity_criterion);
    }

    rec.check("conjugating J1 onto J2", None, quotient_iso_by_conjugacy(&j1, &j2, true)?.map(|p| p.to_string()));
    rec.require("(1,2,3,4) + (1,4,3,2) not in J1", !j1.contains(&element(&g, "(1,2,3,4) + (1,4,3,2)")?)?);
    let (t1, t2) = (r1.to_table(), r2.to_table());
    rec.check("ring isomorphism R1 -> R2", None, unit_spanned_iso(&t1, &t2)?);

    let witness = quotient_iso_by_conjugacy(&j1.antipode()?, &j2, true)?;
    rec.require("antipode of J1 is conjugate to J2", witness.is_some());
    rec.note("conjugating element", witness.map(|p| p.to_string()));
    rec.require("R1 opposite is isomorphic to R2", unit_spanned_iso(&t1.opposite(), &t2)?.is_some());

    let max = r1.max_units_over_principal_quotients()?;
    rec.check("max units of R1/(x)", 6, max.max_units);
    rec.note("R1/(x) unit counts", &max.unit_count_histogram);
    Ok(rec.finish(false))
}

/// A group of order 12 from the bundled list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order12Group {
    pub name: String,
    pub generators: Vec<Permutation>,
    pub spectrum: BTreeMap<u64, usize>,
}

pub fn order_12_groups() -> Result<Vec<Order12Group>> {
    let bad = |l: &str| Error::Malformed(format!("order-12 fixture line {l:?}"));
    let mut out = Vec::new();
    for line in ORDER_12_GROUPS.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let [name, degree, gens, spectrum] = parts[..] else {
            return Err(bad(line));
        };
        let degree: usize = degree.parse().map_err(|_| bad(line))?;
        let generators = gens.split(';').map(|c| parse_cycles(c.trim(), degree)).collect::<Result<Vec<_>>>()?;
        let spectrum = spectrum
            .split_whitespace()
            .map(|kv| {
                let (k, v) = kv.split_once(':').ok_or_else(|| bad(line))?;
                Ok((k.parse().map_err(|_| bad(line))?, v.parse().map_err(|_| bad(line))?))
            })
            .collect::<Result<BTreeMap<u64, usize>>>()?;
        out.push(Order12Group { name: name.to_string(), generators, spectrum });
    }
    Ok(out)
}

pub fn cmd_a4() -> Result<VerificationReport> {
    let a4 = alternating_group(4)?;
    let g = Arc::new(index_group(&a4, false)?);
    let gens = alternating_generators(4);
    let mut rec = Recorder::new(
        "a4",
        "a4",
        json!({ "group": "A4", "group_generators": texts(&gens), "J": A4_GENS, "remark_ideal": [H2] }),
    );

    let report = QuotientRing::build(&close(&g, &gens, &A4_GENS)?)?.unit_report()?;
    rec.check("F2[A4]/J size", 32, report.ring_size);
    rec.check("F2[A4]/J units", 12, report.unit_count);
    rec.require("F2[A4]/J identity criterion", report.identity_criterion);

    let hurwitz = hurwitz_mod2();
    let units = hurwitz.unit_group()?;
    let a4_spectrum = order_spectrum(&a4)?;
    rec.check("Hurwitz mod 2 size", 16, hurwitz.size());
    rec.require("Hurwitz mod 2 is associative", hurwitz.is_associative());
    rec.check("Hurwitz mod 2 units", 12, units.count());
    rec.check("Hurwitz mod 2 unit spectrum", a4_spectrum.clone(), units.spectrum());

    // the spectrum separates A4 from the other groups of order 12
    let groups = order_12_groups()?;
    let mut computed = Vec::new();
    for grp in &groups {
        let h = generated_subgroup(&grp.generators)?;
        let spectrum = order_spectrum(&h)?;
        rec.require(
            &format!("{} has order 12 and the listed spectrum", grp.name),
            h.len() == 12 && spectrum == grp.spectrum,
        );
        computed.push(grp.name.clone());
    }
    rec.check("order-12 groups listed", 5, computed.len());
    let matching: Vec<&str> =
        groups.iter().filter(|grp| grp.spectrum == a4_spectrum).map(|grp| grp.name.as_str()).collect();
    rec.check("order-12 groups with the A4 spectrum", vec!["A4"], matching);

    let remark = QuotientRing::build(&close(&g, &gens, &[H2])?)?.to_table();
    rec.check("F2[A4]/(H2) size", 16, remark.size());
    let iso = unit_spanned_iso(&hurwitz, &remark)?;
    rec.require("Hurwitz mod 2 is isomorphic to F2[A4]/(H2)", iso.is_some());
    if let Some(iso) = iso {
        rec.note("isomorphism columns", iso.columns);
    }
    Ok(rec.finish(false))
}

pub fn cmd_a8() -> Result<VerificationReport> {
    let mut rec = Recorder::new("a8", "a8", json!({ "ring": "M4(F2)", "group": "A8" }));
    let id = a8_identification()?;
    rec.check("unit count of M4(F2)", 20160, id.gl4.order);
    rec.check("order of A8", 20160, id.a8.order);
    rec.check("order spectra", id.a8.spectrum.clone(), id.gl4.spectrum.clone());
    rec.require("elements of order 15 in GL4(F2)", id.gl4.has_order_15);
    rec.require("GL4(F2) is simple", id.gl4.simple);
    rec.require("A8 is simple", id.a8.simple);
    rec.note("caveat", &id.caveat);
    Ok(rec.finish(false))
}

/// Every command in order; degree families run up to `n_max`.
pub fn cmd_all(n_max: usize) -> Result<Vec<VerificationReport>> {
    check_degree(n_max)?;
    let mut out = vec![guarded("c5", "c5", cmd_c5), guarded("s3", "s3", cmd_s3)];
    out.extend(cmd_sn(n_max)?);
    out.extend(cmd_an(n_max)?);
    out.push(guarded("s4", "s4", cmd_s4));
    out.push(guarded("a4", "a4", cmd_a4));
    out.push(guarded("a8", "a8", cmd_a8));
    Ok(out)
}

/// Runs one command by name; `sn` and `an` return one report per degree.
pub fn run(command: &str, n_max: usize) -> Result<Vec<VerificationReport>> {
    match command {
        "c5" => Ok(vec![guarded("c5", "c5", cmd_c5)]),
        "s3" => Ok(vec![guarded("s3", "s3", cmd_s3)]),
        "s4" => Ok(vec![guarded("s4", "s4", cmd_s4)]),
        "a4" => Ok(vec![guarded("a4", "a4", cmd_a4)]),
        "a8" => Ok(vec![guarded("a8", "a8", cmd_a8)]),
        "sn" => cmd_sn(n_max),
        "an" => cmd_an(n_max),
        "all" => cmd_all(n_max),
        other => Err(Error::Precondition(format!("unknown command {other:?}"))),
    }
}
