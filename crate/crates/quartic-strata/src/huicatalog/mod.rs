// SPDX-License-Identifier: MIT OR Apache-2.0
//! Catalog of Hui normal forms: one parametrized quartic per singularity
//! stratum. Samples are certified against the excluded parameter loci, and
//! the specialization relation between strata is derived from samples.
//!
//! ```
//! use quartic_strata::huicatalog::{HuiCatalog, StratumLabel};
//!
//! let cat = HuiCatalog::standard();
//! let label: StratumLabel = "rA₁⁶".parse().unwrap();
//! let f = cat.normal_form_rational(&label, &[]).unwrap();
//! assert_eq!(f.to_string(), "x^2*y*z + x*y^2*z + x*y*z^2");
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{Field, Fp, Rational};
use crate::error::{Error, Result};
use crate::forms::expr::SparsePoly;
use crate::forms::Form;
use crate::singclass::{quartic_singularity_type, quartic_singularity_type_mod_p, GitStatus};

/// Shipped catalog text.
pub const STANDARD_CATALOG: &str = include_str!("../../data/hui_catalog.txt");

/// Names of the parameters, in table order.
pub const PARAM_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Bound on the absolute value of random rational parameters.
pub const RATIONAL_PARAM_BOUND: i64 = 40;

/// Number of parameter draws tried by certified sampling.
pub const SAMPLE_RETRIES: usize = 64;

/// Integer values probed for each parameter when searching for excluded loci.
pub const PROBED_VALUES: std::ops::RangeInclusive<i64> = -3..=3;

/// Random completions certified per probed value.
const PROBE_DRAWS: usize = 4;

/// Prime used when searching for excluded loci.
pub const PROBE_PRIME: u64 = 10007;

/// Canonical ASCII name of a singularity stratum, such as `A1^2A2`,
/// `rA1^4(conic)` or `l^2c'`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StratumLabel(String);

impl StratumLabel {
    /// Label without checking it against a catalog.
    pub fn new_unchecked(name: &str) -> Self {
        StratumLabel(name.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_smooth(&self) -> bool {
        self.0 == "Smooth"
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Rewrites typographic spellings (subscripts, superscripts, `ʳ`, `ℓ`, `′`,
/// `_cub`, `_con`) into the canonical ASCII form.
pub fn normalize_label(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '₀'..='₉' => out.push(char::from_digit(ch as u32 - '₀' as u32, 10).unwrap()),
            '⁰' => out.push_str("^0"),
            '¹' => out.push_str("^1"),
            '²' => out.push_str("^2"),
            '³' => out.push_str("^3"),
            '⁴'..='⁹' => {
                out.push('^');
                out.push(char::from_digit(ch as u32 - '⁴' as u32 + 4, 10).unwrap());
            }
            'ʳ' => out.push('r'),
            'ℓ' => out.push('l'),
            '′' => out.push('\''),
            ' ' | '\t' | '{' | '}' => {}
            _ => out.push(ch),
        }
    }
    for (from, to) in [("_cub", "(cubic)"), ("_con", "(conic)"), ("(cub)", "(cubic)"), ("(con)", "(conic)")] {
        if out.ends_with(from) {
            out.truncate(out.len() - from.len());
            out.push_str(to);
        }
    }
    if out.eq_ignore_ascii_case("smooth") {
        out = "Smooth".into();
    }
    out
}

impl FromStr for StratumLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let name = normalize_label(s);
        if HuiCatalog::standard().templates.iter().any(|t| t.label.0 == name) {
            Ok(StratumLabel(name))
        } else {
            Err(Error::Input(format!("unknown stratum label {s:?}")))
        }
    }
}

/// Which Hui table a normal form comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    Smooth,
    Irreducible,
    Reducible,
    NonIsolated,
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smooth" => Ok(TableKind::Smooth),
            "irreducible" => Ok(TableKind::Irreducible),
            "reducible" => Ok(TableKind::Reducible),
            "non-isolated" => Ok(TableKind::NonIsolated),
            _ => Err(Error::Input(format!("unknown table kind {s:?}"))),
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Smooth => "smooth",
            TableKind::Irreducible => "irreducible",
            TableKind::Reducible => "reducible",
            TableKind::NonIsolated => "non-isolated",
        })
    }
}

/// A parametrized normal form of one stratum.
#[derive(Clone, Debug)]
pub struct NormalFormTemplate {
    pub label: StratumLabel,
    pub table: TableKind,
    /// Number of continuous parameters.
    pub dimension: usize,
    pub git: GitStatus,
    pub params: Vec<String>,
    /// A parameter restricted to finitely many values.
    pub discrete: Option<(String, Vec<i64>)>,
    pub formula: String,
    /// The 15 coefficients as polynomials in the parameters.
    pub coeffs: Vec<SparsePoly>,
    pub excluded_seeded: Vec<SparsePoly>,
    pub excluded_empirical: Vec<SparsePoly>,
    pub specializations: Vec<StratumLabel>,
}

impl NormalFormTemplate {
    /// Total number of parameter values accepted by [`Self::instantiate`].
    pub fn arity(&self) -> usize {
        self.dimension + usize::from(self.discrete.is_some())
    }

    pub fn is_unstable(&self) -> bool {
        self.git == GitStatus::Unstable
    }

    fn full_params<F: Field>(&self, params: &[F], template: &F) -> Result<Vec<F>> {
        if params.len() == self.arity() {
            return Ok(params.to_vec());
        }
        if params.len() == self.dimension {
            let mut v = params.to_vec();
            if let Some((_, values)) = &self.discrete {
                v.push(template.int_like(values[0]));
            }
            return Ok(v);
        }
        Err(Error::Input(format!(
            "{} takes {} parameters, got {}",
            self.label,
            self.dimension,
            params.len()
        )))
    }

    /// The normal form with the given parameter values. A discrete parameter
    /// may be omitted, in which case its first listed value is used.
    pub fn instantiate<F: Field>(&self, params: &[F], template: &F) -> Result<Form<F>> {
        let full = self.full_params(params, template)?;
        let coeffs = self.coeffs.iter().map(|c| c.eval_in(&full, template)).collect::<Result<Vec<F>>>()?;
        Form::quartic(coeffs)
    }

    /// Whether the parameter values avoid every excluded locus.
    pub fn avoids_excluded<F: Field>(&self, params: &[F], template: &F) -> Result<bool> {
        let full = self.full_params(params, template)?;
        for g in self.excluded_seeded.iter().chain(&self.excluded_empirical) {
            if g.eval_in(&full, template)?.is_zero_elem() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn draw<F: Field>(&self, rng: &mut ChaCha8Rng, mut uniform: impl FnMut(&mut ChaCha8Rng) -> F, template: &F) -> Vec<F> {
        let mut v: Vec<F> = (0..self.dimension).map(|_| uniform(rng)).collect();
        if let Some((_, values)) = &self.discrete {
            v.push(template.int_like(values[rng.gen_range(0..values.len())]));
        }
        v
    }
}

/// Field in which to sample a normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleField {
    Rational,
    Prime(u64),
}

/// A sampled quartic over the requested field.
#[derive(Clone, Debug)]
pub enum SampledQuartic {
    Rational(Form<Rational>),
    Prime(Form<Fp>),
}

/// The whole catalog, immutable after loading.
#[derive(Clone, Debug)]
pub struct HuiCatalog {
    pub version: u32,
    pub templates: Vec<NormalFormTemplate>,
}

fn parse_poly_list(v: &str, vars: &[&str]) -> Result<Vec<SparsePoly>> {
    v.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| SparsePoly::parse(s, vars))
        .collect()
}

fn seed_for(label: &StratumLabel, seed: u64) -> u64 {
    label
        .0
        .bytes()
        .fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl HuiCatalog {
    /// The shipped catalog.
    pub fn standard() -> &'static HuiCatalog {
        static CAT: OnceLock<HuiCatalog> = OnceLock::new();
        CAT.get_or_init(|| HuiCatalog::parse(STANDARD_CATALOG).expect("shipped Hui catalog parses"))
    }

    pub fn load(path: &Path) -> Result<HuiCatalog> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        HuiCatalog::parse(&text)
    }

    /// Parses the catalog text format.
    pub fn parse(text: &str) -> Result<HuiCatalog> {
        let mut version = None;
        let mut records: Vec<(String, Vec<(String, String)>)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                records.push((name.to_string(), Vec::new()));
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("catalog line {}: expected key = value", lineno + 1)))?;
            let (k, v) = (k.trim().to_string(), v.trim().to_string());
            match records.last_mut() {
                Some((_, fields)) => fields.push((k, v)),
                None if k == "version" => {
                    version = Some(v.parse().map_err(|_| Error::Input("bad catalog version".into()))?);
                }
                None => return Err(Error::Input(format!("catalog line {}: field outside a record", lineno + 1))),
            }
        }
        let mut templates = Vec::new();
        for (name, fields) in records {
            let get = |key: &str| -> Result<String> {
                fields
                    .iter()
                    .find(|(k, _)| k == key)
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| Error::Input(format!("catalog record {name}: missing {key}")))
            };
            let opt = |key: &str| fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone());
            let dimension: usize = get("dimension")?
                .parse()
                .map_err(|_| Error::Input(format!("catalog record {name}: bad dimension")))?;
            let params: Vec<String> = get("params")?.split_whitespace().map(String::from).collect();
            if params.len() != dimension {
                return Err(Error::Input(format!("catalog record {name}: dimension does not match params")));
            }
            let discrete = match opt("discrete") {
                Some(d) => {
                    let (p, vals) = d
                        .split_once('=')
                        .ok_or_else(|| Error::Input(format!("catalog record {name}: bad discrete field")))?;
                    let vals = vals
                        .split_whitespace()
                        .map(|v| v.parse::<i64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| Error::Input(format!("catalog record {name}: bad discrete values")))?;
                    Some((p.trim().to_string(), vals))
                }
                None => None,
            };
            let arity = dimension + usize::from(discrete.is_some());
            let vars = &PARAM_NAMES[..arity];
            let coeffs = parse_poly_list(&get("coeffs")?, vars)?;
            if coeffs.len() != 15 {
                return Err(Error::Input(format!("catalog record {name}: expected 15 coefficients")));
            }
            let specializations = opt("specializations.derived")
                .unwrap_or_default()
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(StratumLabel::new_unchecked)
                .collect();
            templates.push(NormalFormTemplate {
                label: StratumLabel(normalize_label(&name)),
                table: get("table")?.parse()?,
                dimension,
                git: get("git")?.parse()?,
                params,
                discrete,
                formula: get("formula")?,
                coeffs,
                excluded_seeded: parse_poly_list(&opt("excluded.seeded").unwrap_or_default(), vars)?,
                excluded_empirical: parse_poly_list(&opt("excluded.empirical").unwrap_or_default(), vars)?,
                specializations,
            });
        }
        let known: BTreeSet<&StratumLabel> = templates.iter().map(|t| &t.label).collect();
        for t in &templates {
            if let Some(bad) = t.specializations.iter().find(|s| !known.contains(s)) {
                return Err(Error::Input(format!("catalog record {}: unknown specialization {bad}", t.label)));
            }
        }
        Ok(HuiCatalog {
            version: version.ok_or_else(|| Error::Input("catalog has no version".into()))?,
            templates,
        })
    }

    /// Serializes the catalog back to its text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let header: Vec<&str> = STANDARD_CATALOG.lines().take_while(|l| l.starts_with('#')).collect();
        for l in header {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(&format!("version = {}\n\n", self.version));
        let join = |v: &[SparsePoly]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ; ");
        for t in &self.templates {
            out.push_str(&format!("[{}]\n", t.label));
            out.push_str(&format!("table = {}\n", t.table));
            out.push_str(&format!("dimension = {}\n", t.dimension));
            out.push_str(&format!("git = {}\n", t.git));
            out.push_str(&format!("params = {}\n", t.params.join(" ")));
            if let Some((p, vals)) = &t.discrete {
                let vals: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("discrete = {p} = {}\n", vals.join(" ")));
            }
            out.push_str(&format!("formula = {}\n", t.formula));
            out.push_str(&format!("coeffs = {}\n", join(&t.coeffs)));
            out.push_str(&format!("excluded.seeded = {}\n", join(&t.excluded_seeded)));
            out.push_str(&format!("excluded.empirical = {}\n", join(&t.excluded_empirical)));
            let specs: Vec<&str> = t.specializations.iter().map(|s| s.as_str()).collect();
            out.push_str(&format!("specializations.derived = {}\n\n", specs.join(", ")));
        }
        out
    }

    pub fn labels(&self) -> impl Iterator<Item = &StratumLabel> {
        self.templates.iter().map(|t| &t.label)
    }

    /// Labels whose GIT status is not unstable.
    pub fn non_unstable_labels(&self) -> Vec<StratumLabel> {
        self.templates.iter().filter(|t| !t.is_unstable()).map(|t| t.label.clone()).collect()
    }

    pub fn get(&self, label: &StratumLabel) -> Result<&NormalFormTemplate> {
        self.templates
            .iter()
            .find(|t| &t.label == label)
            .ok_or_else(|| Error::Input(format!("unknown stratum label {label}")))
    }

    pub fn get_mut(&mut self, label: &StratumLabel) -> Result<&mut NormalFormTemplate> {
        self.templates
            .iter_mut()
            .find(|t| &t.label == label)
            .ok_or_else(|| Error::Input(format!("unknown stratum label {label}")))
    }

    /// The normal form of `label` with rational parameters.
    pub fn normal_form_rational(&self, label: &StratumLabel, params: &[Rational]) -> Result<Form<Rational>> {
        self.get(label)?.instantiate(params, &Rational::from_integer(0.into()))
    }

    /// The normal form of `label` with parameters in any field.
    pub fn normal_form<F: Field>(&self, label: &StratumLabel, params: &[F], template: &F) -> Result<Form<F>> {
        self.get(label)?.instantiate(params, template)
    }

    /// A normal form with random parameters avoiding the excluded loci, not
    /// certified. Deterministic in `seed`.
    pub fn sample_uncertified_mod_p(&self, label: &StratumLabel, seed: u64, p: u64) -> Result<Form<Fp>> {
        crate::arith::require_supported_prime(p)?;
        let t = self.get(label)?;
        let one = Fp::from_u64(1, p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(label, seed));
        for _ in 0..SAMPLE_RETRIES {
            let params = t.draw(&mut rng, |r| Fp::from_u64(r.gen(), p), &one);
            if t.avoids_excluded(&params, &one)? {
                return t.instantiate(&params, &one);
            }
        }
        Err(Error::Sampling(format!("{label}: no parameters outside the excluded loci")))
    }

    /// A normal form of `label` with random parameters, certified by the
    /// singularity analyzer to have exactly the labeled type.
    pub fn sample(&self, label: &StratumLabel, seed: u64, field: SampleField) -> Result<SampledQuartic> {
        let t = self.get(label)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(label, seed));
        let mut last = String::from("no attempt");
        for attempt in 0..SAMPLE_RETRIES {
            let check_seed = seed.wrapping_add(attempt as u64);
            let (sampled, observed) = match field {
                SampleField::Rational => {
                    let zero = Rational::from_integer(0.into());
                    let params = t.draw(
                        &mut rng,
                        |r| Rational::from_integer(r.gen_range(-RATIONAL_PARAM_BOUND..=RATIONAL_PARAM_BOUND).into()),
                        &zero,
                    );
                    if !t.avoids_excluded(&params, &zero)? {
                        continue;
                    }
                    let f = t.instantiate(&params, &zero)?;
                    let observed = quartic_singularity_type(&f, check_seed);
                    (SampledQuartic::Rational(f), observed)
                }
                SampleField::Prime(p) => {
                    crate::arith::require_supported_prime(p)?;
                    let one = Fp::from_u64(1, p);
                    let params = t.draw(&mut rng, |r| Fp::from_u64(r.gen(), p), &one);
                    if !t.avoids_excluded(&params, &one)? {
                        continue;
                    }
                    let f = t.instantiate(&params, &one)?;
                    let observed = quartic_singularity_type_mod_p(&f, check_seed);
                    (SampledQuartic::Prime(f), observed)
                }
            };
            match observed {
                Ok(ty) if ty.name() == label.as_str() => return Ok(sampled),
                Ok(ty) => last = format!("observed {}", ty.name()),
                Err(e) => last = e.to_string(),
            }
        }
        Err(Error::Sampling(format!("{label}: certification failed after {SAMPLE_RETRIES} draws ({last})")))
    }

    /// Certified rational sample.
    pub fn sample_rational(&self, label: &StratumLabel, seed: u64) -> Result<Form<Rational>> {
        match self.sample(label, seed, SampleField::Rational)? {
            SampledQuartic::Rational(f) => Ok(f),
            SampledQuartic::Prime(_) => unreachable!("rational sampling returns a rational form"),
        }
    }

    /// Certified sample over `F_p`.
    pub fn sample_mod_p(&self, label: &StratumLabel, seed: u64, p: u64) -> Result<Form<Fp>> {
        match self.sample(label, seed, SampleField::Prime(p))? {
            SampledQuartic::Prime(f) => Ok(f),
            SampledQuartic::Rational(_) => unreachable!("prime-field sampling returns a prime-field form"),
        }
    }

    /// Loci `param = v` (for small integers `v`) on which no sample certifies,
    /// excluding loci already ruled out by the recorded exclusions.
    pub fn discover_excluded(&self, label: &StratumLabel, seed: u64) -> Result<Vec<SparsePoly>> {
        let t = self.get(label)?;
        if t.is_unstable() || t.label.is_smooth() {
            return Ok(Vec::new());
        }
        let p = PROBE_PRIME;
        let one = Fp::from_u64(1, p);
        let vars = &PARAM_NAMES[..t.arity()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(label, seed ^ 0xe8c1));
        let mut found = Vec::new();
        for (i, name) in t.params.iter().enumerate() {
            for v in PROBED_VALUES {
                let (mut tried, mut certified) = (0, 0);
                for k in 0..PROBE_DRAWS * 4 {
                    if tried == PROBE_DRAWS {
                        break;
                    }
                    let mut params = t.draw(&mut rng, |r| Fp::from_u64(r.gen(), p), &one);
                    params[i] = Fp::new(v, p);
                    if !t.avoids_excluded(&params, &one)? {
                        continue;
                    }
                    tried += 1;
                    let f = t.instantiate(&params, &one)?;
                    if matches!(quartic_singularity_type_mod_p(&f, seed.wrapping_add(k as u64)), Ok(ty) if ty.name() == label.as_str())
                    {
                        certified += 1;
                        break;
                    }
                }
                if tried > 0 && certified == 0 {
                    found.push(SparsePoly::parse(&format!("{name} - ({v})"), vars)?);
                }
            }
        }
        Ok(found)
    }

    /// The catalog with empirical exclusions and specializations re-derived.
    pub fn rederived(&self, strata: &crate::strata::StrataCatalog, seed: u64) -> Result<HuiCatalog> {
        let mut out = self.clone();
        for t in &mut out.templates {
            t.excluded_empirical.clear();
            t.specializations.clear();
        }
        let labels: Vec<StratumLabel> = out.templates.iter().map(|t| t.label.clone()).collect();
        for l in &labels {
            let ex = out.discover_excluded(l, seed)?;
            out.get_mut(l)?.excluded_empirical = ex;
        }
        for (a, below) in crate::strata::derive_specializations(&out, strata, seed)? {
            out.get_mut(&a)?.specializations = below;
        }
        Ok(out)
    }

    /// Labels strictly below `label` in the derived specialization order.
    pub fn specializations(&self, label: &StratumLabel) -> Result<Vec<StratumLabel>> {
        let t = self.get(label)?;
        if t.is_unstable() {
            return Err(Error::Input(format!("{label} is GIT-unstable and has no specializations")));
        }
        Ok(t.specializations.clone())
    }
}
