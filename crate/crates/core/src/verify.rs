//! Randomized machine checks of the splitting and point-pushing identities.
//!
//! A [`Verifier`] holds one bundle context, the standard push table and the
//! conjugation direction found to satisfy
//! `sigma(Push(t)) = C_{iota t} ∘ transvection(k [t])` on the generators.
//! Each [`Check`] runs either a fixed list of cases or `trials` random ones;
//! named [`Statement`]s group checks the way the CLI exposes them.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bundle::BundleContext;
use crate::endo::{BundleEndo, Conjugation, FreeEndo};
use crate::error::{Error, Result};
use crate::homology::{abelianize, poincare_delta, HomologyClass, Orientation};
use crate::maps::{inner, inner_inverse, iota, phi, scaled_class, sigma, tau, transvection};
use crate::oracle::{bfs_oracle_trivial, OracleConfig};
use crate::push::{c_power_conjugation, PushTable};
use crate::sample::{
    all_reduced_words, random_class, random_commutator, random_element, random_trivial_word,
    random_word_up_to, trial_rng,
};
use crate::word::{surface_relator, Alphabet, FreeWord, Letter};

/// Counterexamples kept per check; counts are always exact.
const MAX_COUNTEREXAMPLES: usize = 10;

/// Exhaustive enumeration is used for genus 1 up to this length.
const TORUS_EXHAUSTIVE_LEN: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub genus: usize,
    pub euler: i64,
    pub seed: u64,
    pub trials: usize,
    pub max_word_len: usize,
    pub oracle_depth: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            genus: 2,
            euler: 1,
            seed: 0,
            trials: 100,
            max_word_len: 6,
            oracle_depth: OracleConfig::default().depth,
        }
    }
}

impl VerifyConfig {
    pub fn new(genus: usize, euler: i64) -> VerifyConfig {
        VerifyConfig {
            genus,
            euler,
            ..VerifyConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Configuration("trials must be at least 1".into()));
        }
        BundleContext::new(self.genus, self.euler).map(|_| ())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Splitting,
    KernelTau,
    PushIdentity,
    PushFactorization,
    TheoremA,
    KLinearity,
    WordProblemOracle,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::Splitting,
        Statement::KernelTau,
        Statement::PushIdentity,
        Statement::PushFactorization,
        Statement::TheoremA,
        Statement::KLinearity,
        Statement::WordProblemOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::Splitting => "splitting",
            Statement::KernelTau => "kernel-tau",
            Statement::PushIdentity => "prop-3-3",
            Statement::PushFactorization => "cor-3-4",
            Statement::TheoremA => "theorem-A",
            Statement::KLinearity => "k-linearity",
            Statement::WordProblemOracle => "word-problem-oracle",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Statement::Splitting => "phi ∘ sigma = id, sigma is a homomorphism, constructed maps lie in AUT",
            Statement::KernelTau => "tau ∘ transvection = Poincare dual, tau is additive",
            Statement::PushIdentity => "sigma(Push(t)) = C_{iota t} ∘ transvection(k [t]) for any lift of t",
            Statement::PushFactorization => {
                "the kernel part of sigma(Push(t)) is k times the dual of [t]; transvections commute with inner maps"
            }
            Statement::TheoremA => "splitting, left square and k-linearity together",
            Statement::KLinearity => "transvection parts scale linearly in the Euler number",
            Statement::WordProblemOracle => "Dehn's algorithm (or the torus normal form) agrees with BFS certificates",
        }
    }

    pub fn checks(self) -> &'static [Check] {
        use Check::*;
        match self {
            Statement::Splitting => &[PhiSigma, SigmaHomomorphism, AutMembership],
            Statement::KernelTau => &[TauDelta, TauAdditivity],
            Statement::PushIdentity => &[PushGenerators, PushProducts, SecondLift],
            Statement::PushFactorization => &[KernelPart, Commutation, CommutatorWords],
            Statement::TheoremA => &[PhiSigma, LeftSquare, KLinearity],
            Statement::KLinearity => &[KLinearity],
            Statement::WordProblemOracle => &[WordProblemOracle],
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Statement> {
        let st = match s.to_ascii_lowercase().as_str() {
            "splitting" | "split" => Statement::Splitting,
            "kernel-tau" | "tau" => Statement::KernelTau,
            "prop-3-3" | "push-identity" => Statement::PushIdentity,
            "cor-3-4" | "push-factorization" => Statement::PushFactorization,
            "theorem-a" | "diagram" => Statement::TheoremA,
            "k-linearity" | "linearity" => Statement::KLinearity,
            "word-problem-oracle" | "oracle" => Statement::WordProblemOracle,
            _ => {
                let known: Vec<&str> = Statement::ALL.iter().map(|s| s.name()).collect();
                return Err(Error::Configuration(format!(
                    "unknown statement {s:?}; expected one of {}",
                    known.join(", ")
                )));
            }
        };
        Ok(st)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `phi(sigma(f)) = f` on random push composites.
    PhiSigma,
    /// `sigma(f1 ∘ f2) = sigma(f1) ∘ sigma(f2)`.
    SigmaHomomorphism,
    /// Constructed maps preserve the bundle relation and the intersection form.
    AutMembership,
    /// `tau(transvection(e)) = delta(e)` on the basis.
    TauDelta,
    /// `tau(e1 ∘ e2) = tau(e1) + tau(e2)` on kernel elements.
    TauAdditivity,
    /// The push identity on every generator and inverse generator.
    PushGenerators,
    /// The push identity on random products.
    PushProducts,
    /// The push identity after inserting a conjugate of `c^±1` into the lift.
    SecondLift,
    /// `tau(sigma(Push t) ∘ C_{iota t}^-1) = k delta([t])`.
    KernelPart,
    /// `transvection(gamma) ∘ C_x = C_x ∘ transvection(gamma)`.
    Commutation,
    /// `sigma(Push t) = C_{iota t}` for commutators `t`.
    CommutatorWords,
    /// `sigma(Push t) ∘ C_{iota t}^-1 = transvection(k [t])`.
    LeftSquare,
    /// Kernel parts at Euler number `m` equal `m` times those at `1`.
    KLinearity,
    /// Word problem against the BFS oracle.
    WordProblemOracle,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::PhiSigma,
        Check::SigmaHomomorphism,
        Check::AutMembership,
        Check::TauDelta,
        Check::TauAdditivity,
        Check::PushGenerators,
        Check::PushProducts,
        Check::SecondLift,
        Check::KernelPart,
        Check::Commutation,
        Check::CommutatorWords,
        Check::LeftSquare,
        Check::KLinearity,
        Check::WordProblemOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::PhiSigma => "phi-sigma",
            Check::SigmaHomomorphism => "sigma-homomorphism",
            Check::AutMembership => "aut-membership",
            Check::TauDelta => "tau-delta",
            Check::TauAdditivity => "tau-additivity",
            Check::PushGenerators => "push-generators",
            Check::PushProducts => "push-products",
            Check::SecondLift => "second-lift",
            Check::KernelPart => "kernel-part",
            Check::Commutation => "commutation",
            Check::CommutatorWords => "commutator-words",
            Check::LeftSquare => "left-square",
            Check::KLinearity => "k-linearity",
            Check::WordProblemOracle => "word-problem-oracle",
        }
    }

    fn stream_base(self) -> u64 {
        let idx = Check::ALL.iter().position(|&c| c == self).expect("listed") as u64;
        (idx + 1) << 32
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    /// Trial index for random checks, case index for fixed ones.
    pub case: usize,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }

    fn from_outcomes(
        check: Check,
        outcomes: Vec<(String, std::result::Result<(), String>)>,
    ) -> CheckResult {
        let mut res = CheckResult {
            check: check.name(),
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
        };
        for (case, (input, outcome)) in outcomes.into_iter().enumerate() {
            match outcome {
                Ok(()) => res.passed += 1,
                Err(detail) => {
                    res.failed += 1;
                    if res.counterexamples.len() < MAX_COUNTEREXAMPLES {
                        res.counterexamples.push(Counterexample {
                            check: check.name(),
                            case,
                            input,
                            detail,
                        });
                    }
                }
            }
        }
        res
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionProbe {
    pub left: bool,
    pub right: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub g: usize,
    pub k: i64,
    pub seed: u64,
    pub trials: usize,
    pub max_word_len: usize,
    pub oracle_depth: usize,
    /// Conjugation direction used for `C_x`, `null` if neither satisfies the push identity.
    pub convention: Option<Conjugation>,
    pub conventions_tested: ConventionProbe,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.checks.iter().all(CheckResult::ok)
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} (g={}, k={}, seed={}, trials={}): {} passed, {} failed\n",
            self.statement, self.g, self.k, self.seed, self.trials, self.passed, self.failed
        );
        let conv = match self.convention {
            Some(c) => c.describe().to_string(),
            None => "none of the two directions satisfies the push identity".into(),
        };
        out.push_str(&format!("  convention: {conv}\n"));
        for c in &self.checks {
            let mark = if c.ok() { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "  {:<20} {:>6} passed {:>6} failed  {mark}\n",
                c.check, c.passed, c.failed
            ));
        }
        for ce in &self.counterexamples {
            out.push_str(&format!(
                "  counterexample [{} #{}] {}: {}\n",
                ce.check, ce.case, ce.input, ce.detail
            ));
        }
        out
    }
}

type Outcome = std::result::Result<(), String>;

fn fail_unless(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn lit(w: &FreeWord) -> String {
    w.to_literal(Alphabet::Surface)
}

pub struct Verifier {
    config: VerifyConfig,
    ctx: BundleContext,
    table: PushTable,
    probe: ConventionProbe,
    convention: Option<Conjugation>,
    /// Contexts `(g, m)` compared against `(g, 1)` for linearity.
    scaled: Vec<(i64, BundleContext)>,
}

impl Verifier {
    pub fn new(config: VerifyConfig) -> Result<Verifier> {
        config.validate()?;
        let ctx = BundleContext::new(config.genus, config.euler)?;
        let table = PushTable::standard(config.genus)?;
        table.validate()?;
        let holds = |conv: Conjugation| {
            (0..2 * config.genus).all(|s| {
                let t = FreeWord::letter(Letter::from_slot(s, false));
                push_identity(&ctx, &table, &t, conv).is_ok()
            })
        };
        let probe = ConventionProbe {
            left: holds(Conjugation::Left),
            right: holds(Conjugation::Right),
        };
        let convention = if probe.left {
            Some(Conjugation::Left)
        } else if probe.right {
            Some(Conjugation::Right)
        } else {
            None
        };
        let mut ms: Vec<i64> = vec![1, 2, 3, config.euler];
        if config.genus >= 2 {
            ms.push(0);
        }
        ms.sort_unstable();
        ms.dedup();
        let scaled = ms
            .into_iter()
            .map(|m| BundleContext::new(config.genus, m).map(|c| (m, c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Verifier {
            config,
            ctx,
            table,
            probe,
            convention,
            scaled,
        })
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    pub fn context(&self) -> &BundleContext {
        &self.ctx
    }

    pub fn table(&self) -> &PushTable {
        &self.table
    }

    pub fn convention(&self) -> Option<Conjugation> {
        self.convention
    }

    pub fn probe(&self) -> ConventionProbe {
        self.probe
    }

    fn conv(&self) -> Conjugation {
        self.convention.unwrap_or_default()
    }

    fn genus(&self) -> usize {
        self.config.genus
    }

    fn random_lift(&self, rng: &mut ChaCha8Rng) -> FreeWord {
        random_word_up_to(rng, self.genus(), self.config.max_word_len)
    }

    /// Random automorphism fixing `c`: a table entry, its inverse, or a push
    /// composite, possibly followed by a power of `C_c`.
    fn random_fixing_aut(&self, rng: &mut ChaCha8Rng) -> (String, FreeEndo) {
        let g = self.genus();
        let (label, f) = match rng.random_range(0..3) {
            0 | 1 => {
                let l = Letter::from_slot(rng.random_range(0..2 * g), rng.random_bool(0.5));
                (
                    format!("Push({})", l.literal(Alphabet::Surface)),
                    self.table.letter(l).clone(),
                )
            }
            _ => {
                let t = self.random_lift(rng);
                let f = self.table.push(&t).expect("lift within genus");
                (format!("Push({})", lit(&t)), f)
            }
        };
        let n = rng.random_range(-1..=1);
        if n == 0 {
            (label, f)
        } else {
            (
                format!("C_c^{n} ∘ {label}"),
                c_power_conjugation(g, n).compose(&f),
            )
        }
    }

    fn run_random<F>(&self, check: Check, f: F) -> CheckResult
    where
        F: Fn(&mut ChaCha8Rng) -> (String, Outcome) + Sync + Send,
    {
        let base = check.stream_base();
        let seed = self.config.seed;
        let outcomes: Vec<_> = (0..self.config.trials)
            .into_par_iter()
            .map(|i| f(&mut trial_rng(seed, base + i as u64)))
            .collect();
        CheckResult::from_outcomes(check, outcomes)
    }

    fn run_fixed<T, F>(&self, check: Check, cases: Vec<T>, f: F) -> CheckResult
    where
        T: Send,
        F: Fn(T) -> (String, Outcome) + Sync + Send,
    {
        let outcomes: Vec<_> = cases.into_par_iter().map(f).collect();
        CheckResult::from_outcomes(check, outcomes)
    }

    pub fn run_check(&self, check: Check) -> CheckResult {
        let g = self.genus();
        let k = self.config.euler;
        let ctx = &self.ctx;
        let conv = self.conv();
        match check {
            Check::PhiSigma => self.run_random(check, |rng| {
                let (label, f) = self.random_fixing_aut(rng);
                let outcome = match sigma(ctx, &f) {
                    Ok(s) => fail_unless(phi(&s).surface_eq(ctx.surface(), &f), || {
                        "phi(sigma(f)) differs from f".into()
                    }),
                    Err(e) => Err(e.to_string()),
                };
                (label, outcome)
            }),
            Check::SigmaHomomorphism => self.run_random(check, |rng| {
                let (l1, f1) = self.random_fixing_aut(rng);
                let (l2, f2) = self.random_fixing_aut(rng);
                let outcome = (|| {
                    let lhs = sigma(ctx, &f1.compose(&f2))?;
                    let rhs = sigma(ctx, &f1)?.compose(&sigma(ctx, &f2)?);
                    Ok::<_, Error>(lhs.endo_eq(ctx, &rhs))
                })();
                let outcome = match outcome {
                    Ok(eq) => fail_unless(eq, || {
                        "sigma(f1 ∘ f2) differs from sigma(f1) ∘ sigma(f2)".into()
                    }),
                    Err(e) => Err(e.to_string()),
                };
                (format!("f1 = {l1}, f2 = {l2}"), outcome)
            }),
            Check::AutMembership => self.run_random(check, |rng| {
                let t = self.random_lift(rng);
                let gamma = random_class(rng, g, 3);
                let x = random_element(rng, g, self.config.max_word_len, 3);
                let input = format!(
                    "t = {}, gamma = {:?}, x = {}",
                    lit(&t),
                    gamma.coords(),
                    x.to_literal()
                );
                let outcome = (|| {
                    let s = sigma(ctx, &self.table.push(&t)?)?;
                    let d = transvection(g, &gamma)?;
                    let c = inner(g, &x, conv);
                    let all = s.compose(&d).compose(&c);
                    for (name, e) in [
                        ("sigma(Push t)", &s),
                        ("transvection", &d),
                        ("inner", &c),
                        ("composite", &all),
                    ] {
                        if !e.preserves_bundle_relation(ctx) {
                            return Ok(Err(format!("{name} breaks the bundle relation")));
                        }
                        if e.orientation() != Some(Orientation::Preserving) {
                            return Ok(Err(format!("{name} is not symplectic of type +1")));
                        }
                    }
                    Ok::<_, Error>(Ok(()))
                })();
                (input, outcome.unwrap_or_else(|e| Err(e.to_string())))
            }),
            Check::TauDelta => self.run_fixed(check, (0..2 * g).collect(), |slot| {
                let gamma = HomologyClass::basis(g, slot);
                let input = format!(
                    "basis class {}",
                    Letter::from_slot(slot, false).literal(Alphabet::Surface)
                );
                let outcome = transvection(g, &gamma)
                    .and_then(|d| tau(ctx, &d))
                    .map_err(|e| e.to_string())
                    .and_then(|t| {
                        let want = poincare_delta(&gamma);
                        fail_unless(t == want, || {
                            format!("tau = {:?}, delta = {:?}", t.coords(), want.coords())
                        })
                    });
                (input, outcome)
            }),
            Check::TauAdditivity => self.run_random(check, |rng| {
                let (l1, e1) = self.random_kernel_element(rng);
                let (l2, e2) = self.random_kernel_element(rng);
                let outcome = (|| {
                    let both = tau(ctx, &e1.compose(&e2))?;
                    let sum = &tau(ctx, &e1)? + &tau(ctx, &e2)?;
                    Ok::<_, Error>(fail_unless(both == sum, || {
                        format!(
                            "tau(e1 ∘ e2) = {:?}, sum = {:?}",
                            both.coords(),
                            sum.coords()
                        )
                    }))
                })();
                (
                    format!("e1 = {l1}, e2 = {l2}"),
                    outcome.unwrap_or_else(|e| Err(e.to_string())),
                )
            }),
            Check::PushGenerators => {
                let cases: Vec<Letter> = (0..2 * g)
                    .flat_map(|s| [Letter::from_slot(s, false), Letter::from_slot(s, true)])
                    .collect();
                self.run_fixed(check, cases, |l| {
                    let t = FreeWord::letter(l);
                    (lit(&t), push_identity(ctx, &self.table, &t, conv))
                })
            }
            Check::PushProducts => self.run_random(check, |rng| {
                let t = self.random_lift(rng);
                (lit(&t), push_identity(ctx, &self.table, &t, conv))
            }),
            Check::SecondLift => self.run_random(check, |rng| {
                let t = self.random_lift(rng);
                let u = random_word_up_to(rng, g, 3);
                let e = if rng.random_bool(0.5) { 1 } else { -1 };
                let cut = rng.random_range(0..=t.len());
                let bump = surface_relator(g).pow(e).conjugate_by(&u);
                let head = FreeWord::from_letters(t.letters()[..cut].iter().copied());
                let tail = FreeWord::from_letters(t.letters()[cut..].iter().copied());
                let t2 = head.concat(&bump).concat(&tail);
                let input = format!("t = {}, second lift = {}", lit(&t), lit(&t2));
                let outcome = push_identity(ctx, &self.table, &t2, conv).and_then(|()| {
                    fail_unless(
                        inner(g, &iota(&t), conv).endo_eq(ctx, &inner(g, &iota(&t2), conv)),
                        || "C_{iota t} depends on the lift".into(),
                    )
                });
                (input, outcome)
            }),
            Check::KernelPart => self.run_random(check, |rng| {
                let t = self.random_lift(rng);
                let outcome = kernel_part(ctx, &self.table, &t, conv)
                    .map_err(|e| e.to_string())
                    .and_then(|part| {
                        let want = poincare_delta(&abelianize(g, &t)).scale(k);
                        fail_unless(part == want, || {
                            format!("tau = {:?}, expected {:?}", part.coords(), want.coords())
                        })
                    });
                (lit(&t), outcome)
            }),
            Check::Commutation => self.run_random(check, |rng| {
                let gamma = random_class(rng, g, 3);
                let x = random_element(rng, g, self.config.max_word_len, 3);
                let input = format!("gamma = {:?}, x = {}", gamma.coords(), x.to_literal());
                let outcome = transvection(g, &gamma)
                    .map_err(|e| e.to_string())
                    .and_then(|d| {
                        let c = inner(g, &x, conv);
                        fail_unless(d.compose(&c).endo_eq(ctx, &c.compose(&d)), || {
                            "they do not commute".into()
                        })
                    });
                (input, outcome)
            }),
            Check::CommutatorWords => self.run_random(check, |rng| {
                let t = random_commutator(rng, g, self.config.max_word_len.div_ceil(2));
                let outcome = (|| {
                    if !abelianize(g, &t).is_zero() {
                        return Ok(Err("commutator with nonzero homology class".into()));
                    }
                    let s = sigma(ctx, &self.table.push(&t)?)?;
                    Ok::<_, Error>(fail_unless(
                        s.endo_eq(ctx, &inner(g, &iota(&t), conv)),
                        || "sigma(Push t) is not C_{iota t}".into(),
                    ))
                })();
                (lit(&t), outcome.unwrap_or_else(|e| Err(e.to_string())))
            }),
            Check::LeftSquare => self.run_random(check, |rng| {
                let t = self.random_lift(rng);
                let outcome = (|| {
                    let s = sigma(ctx, &self.table.push(&t)?)?;
                    let lhs = s.compose(&inner_inverse(g, &iota(&t), conv));
                    let rhs = transvection(g, &scaled_class(g, k, &t))?;
                    Ok::<_, Error>(fail_unless(lhs.endo_eq(ctx, &rhs), || {
                        "sigma(Push t) ∘ C_{iota t}^-1 is not transvection(k [t])".into()
                    }))
                })();
                (lit(&t), outcome.unwrap_or_else(|e| Err(e.to_string())))
            }),
            Check::KLinearity => self.run_random(check, |rng| {
                let t = self.random_lift(rng);
                let unit = &self
                    .scaled
                    .iter()
                    .find(|(m, _)| *m == 1)
                    .expect("k = 1 is always present")
                    .1;
                let outcome = kernel_part(unit, &self.table, &t, conv)
                    .map_err(|e| e.to_string())
                    .and_then(|base| {
                        for (m, cm) in &self.scaled {
                            let part = kernel_part(cm, &self.table, &t, conv)
                                .map_err(|e| e.to_string())?;
                            if part != base.scale(*m) {
                                return Err(format!(
                                    "k = {m}: {:?} is not {m} * {:?}",
                                    part.coords(),
                                    base.coords()
                                ));
                            }
                        }
                        Ok(())
                    });
                (lit(&t), outcome)
            }),
            Check::WordProblemOracle => {
                let oracle = self.oracle_config();
                if g == 1 && self.config.max_word_len <= TORUS_EXHAUSTIVE_LEN {
                    let words = all_reduced_words(1, self.config.max_word_len);
                    self.run_fixed(check, words, |w| {
                        (lit(&w), torus_agreement(ctx, &w, &oracle))
                    })
                } else {
                    self.run_random(check, |rng| {
                        let w = if rng.random_bool(0.5) {
                            random_trivial_word(rng, ctx.surface(), self.config.max_word_len)
                        } else {
                            random_word_up_to(rng, g, self.config.max_word_len)
                        };
                        (lit(&w), word_agreement(ctx, &w, &oracle))
                    })
                }
            }
        }
    }

    /// Word-problem agreement on an explicit list of words.
    pub fn check_words(&self, words: &[FreeWord]) -> CheckResult {
        let oracle = self.oracle_config();
        self.run_fixed(Check::WordProblemOracle, words.iter().collect(), |w| {
            (lit(w), word_agreement(&self.ctx, w, &oracle))
        })
    }

    fn oracle_config(&self) -> OracleConfig {
        OracleConfig::with_depth(self.config.oracle_depth)
    }

    fn random_kernel_element(&self, rng: &mut ChaCha8Rng) -> (String, BundleEndo) {
        let g = self.genus();
        if rng.random_bool(0.5) {
            let gamma = random_class(rng, g, 3);
            let e = transvection(g, &gamma).expect("dimension matches");
            (format!("transvection({:?})", gamma.coords()), e)
        } else {
            let t = self.random_lift(rng);
            let s = sigma(&self.ctx, &self.table.push(&t).expect("lift within genus"))
                .expect("pushes fix c");
            let e = s.compose(&inner_inverse(g, &iota(&t), self.conv()));
            (format!("sigma(Push({0})) ∘ C_{{{0}}}^-1", lit(&t)), e)
        }
    }

    pub fn run(&self, statement: Statement) -> VerificationReport {
        let checks: Vec<CheckResult> = statement
            .checks()
            .iter()
            .map(|&c| self.run_check(c))
            .collect();
        self.report(statement.name(), checks)
    }

    pub fn report(&self, statement: &str, checks: Vec<CheckResult>) -> VerificationReport {
        let passed = checks.iter().map(|c| c.passed).sum();
        let failed = checks.iter().map(|c| c.failed).sum();
        let counterexamples = checks
            .iter()
            .flat_map(|c| c.counterexamples.iter().cloned())
            .collect();
        VerificationReport {
            statement: statement.to_string(),
            g: self.config.genus,
            k: self.config.euler,
            seed: self.config.seed,
            trials: self.config.trials,
            max_word_len: self.config.max_word_len,
            oracle_depth: self.config.oracle_depth,
            convention: self.convention,
            conventions_tested: self.probe,
            checks,
            passed,
            failed,
            counterexamples,
        }
    }
}

/// `sigma(Push t) = C_{iota t} ∘ transvection(k [t])`, checked generator by generator.
pub fn push_identity(
    ctx: &BundleContext,
    table: &PushTable,
    t: &FreeWord,
    conv: Conjugation,
) -> Outcome {
    let g = ctx.genus();
    let lhs = table
        .push(t)
        .and_then(|p| sigma(ctx, &p))
        .map_err(|e| e.to_string())?;
    let rhs = inner(g, &iota(t), conv)
        .compose(&transvection(g, &scaled_class(g, ctx.euler(), t)).map_err(|e| e.to_string())?);
    for (slot, (x, y)) in lhs.images().iter().zip(rhs.images()).enumerate() {
        if !ctx.elem_eq(x, y) {
            let gen = Letter::from_slot(slot, false).literal(Alphabet::Bundle);
            let gap = x.mul(&y.inverse());
            let detail = match ctx.z_exponent(&gap) {
                Ok(m) => format!("sides differ on {gen} by z^{m}"),
                Err(_) => format!("sides differ on {gen} outside the center"),
            };
            return Err(detail);
        }
    }
    Ok(())
}

/// `tau(sigma(Push t) ∘ C_{iota t}^-1)`.
pub fn kernel_part(
    ctx: &BundleContext,
    table: &PushTable,
    t: &FreeWord,
    conv: Conjugation,
) -> Result<crate::homology::CohomologyClass> {
    let s = sigma(ctx, &table.push(t)?)?;
    tau(ctx, &s.compose(&inner_inverse(ctx.genus(), &iota(t), conv)))
}

/// Dehn's algorithm against the oracle for `g >= 2`: a certificate must match
/// the Dehn count, and a word Dehn proves trivial must get one.
pub fn word_agreement(ctx: &BundleContext, w: &FreeWord, oracle: &OracleConfig) -> Outcome {
    if ctx.genus() == 1 {
        return torus_agreement(ctx, w, oracle);
    }
    let dehn = ctx.surface().dehn_reduce(w).map_err(|e| e.to_string())?;
    let cert = bfs_oracle_trivial(ctx.surface(), w, oracle).map_err(|e| e.to_string())?;
    match (cert, dehn.is_trivial()) {
        (Some(n), true) => fail_unless(n == dehn.relator_count, || {
            format!("oracle count {n}, Dehn count {}", dehn.relator_count)
        }),
        (Some(n), false) => Err(format!(
            "oracle certificate with count {n}, Dehn residual {}",
            lit(&dehn.residual)
        )),
        (None, true) => Err(format!(
            "Dehn count {} but no certificate within depth {}",
            dehn.relator_count, oracle.depth
        )),
        (None, false) => Ok(()),
    }
}

/// The torus normal form against the oracle.
pub fn torus_agreement(ctx: &BundleContext, w: &FreeWord, oracle: &OracleConfig) -> Outcome {
    let nf = ctx.torus_normal_form(&iota(w)).map_err(|e| e.to_string())?;
    let trivial = nf.a == 0 && nf.b == 0;
    let cert = bfs_oracle_trivial(ctx.surface(), w, oracle).map_err(|e| e.to_string())?;
    match (cert, trivial) {
        (Some(n), true) => fail_unless(nf.z == ctx.euler() * n, || {
            format!("oracle count {n}, normal form z^{}", nf.z)
        }),
        (Some(n), false) => Err(format!(
            "oracle certificate with count {n}, normal form {nf:?}"
        )),
        (None, true) => Err(format!(
            "normal form z^{} but no certificate within depth {}",
            nf.z, oracle.depth
        )),
        (None, false) => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_names_round_trip() {
        for s in Statement::ALL {
            assert_eq!(s.name().parse::<Statement>().unwrap(), s);
        }
        assert_eq!(
            "push-identity".parse::<Statement>().unwrap(),
            Statement::PushIdentity
        );
        assert!("nonsense".parse::<Statement>().is_err());
    }

    #[test]
    fn left_convention_is_detected() {
        for (g, k) in [(1, 2), (2, 1), (2, 3), (3, 1)] {
            let v = Verifier::new(VerifyConfig::new(g, k)).unwrap();
            assert_eq!(
                v.probe(),
                ConventionProbe {
                    left: true,
                    right: false
                },
                "g={g} k={k}"
            );
            assert_eq!(v.convention(), Some(Conjugation::Left));
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = VerifyConfig {
            trials: 10,
            seed: 11,
            ..VerifyConfig::new(2, 2)
        };
        let a = Verifier::new(cfg.clone())
            .unwrap()
            .run(Statement::PushIdentity);
        let b = Verifier::new(cfg).unwrap().run(Statement::PushIdentity);
        assert_eq!(a, b);
        assert!(a.ok(), "{}", a.summary());
    }

    #[test]
    fn zero_trials_rejected() {
        let cfg = VerifyConfig {
            trials: 0,
            ..VerifyConfig::default()
        };
        assert!(matches!(Verifier::new(cfg), Err(Error::Configuration(_))));
        assert!(Verifier::new(VerifyConfig::new(1, 0)).is_err());
    }
}
