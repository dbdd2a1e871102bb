//! Bundled regression fixtures and their runner.
//!
//! One record per line: `id | input | expected | ref`. The input is a code
//! descriptor (`n=7 g=...`, `n=3 v=...`) or a bare `n=14` for factorization
//! cases. The expected field starts with a `tier=` token followed by
//! `key=value` checks; the ref field names the published table or worked
//! example the expected values come from. Tiers are cumulative: running a
//! tier runs every case at or below it.

use crate::acc::{self, trace_mat_mul, AccCode, MinDistance};
use crate::descriptor::CodeDescriptor;
use crate::eaqec;
use crate::f4::F4Vector;
use crate::factor;
use crate::poly::{format_factored, BinPoly};
use crate::tracecode::{self, CyclicCode, TraceAnalysis};
use crate::weight;
use crate::{Error, Result};

/// Feasibility tiers, ordered by how much enumeration they buy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tier {
    /// Dimension checks and distance enumerations up to 2^16 codewords.
    Fast,
    /// Distance enumerations up to 2^33 codewords.
    Extended,
    /// Sampled upper bounds and low-weight scans for codes beyond
    /// exhaustive reach.
    DimsOnly,
}

impl std::str::FromStr for Tier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tier> {
        match s {
            "fast" => Ok(Tier::Fast),
            "extended" => Ok(Tier::Extended),
            "dims-only" | "dims_only" => Ok(Tier::DimsOnly),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown tier {s:?}"),
            }),
        }
    }
}

impl std::fmt::Display for Tier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tier::Fast => "fast",
            Tier::Extended => "extended",
            Tier::DimsOnly => "dims-only",
        })
    }
}

/// Number of random codewords drawn for sampled distance bounds.
pub const SAMPLE_COUNT: u64 = 1_000_000;
/// Seed for the sampled bounds; fixed so verification output is reproducible.
pub const SAMPLE_SEED: u64 = 0xACC0;

#[derive(Clone, Debug)]
pub struct FixtureCase {
    pub id: String,
    pub input: String,
    pub tier: Tier,
    pub checks: Vec<(String, String)>,
    pub reference: String,
    /// Known discrepancy: the recorded values are published but provably not
    /// producible by the construction. The runner reports the difference and
    /// treats "actually differs" as the expected outcome.
    pub expected_fail: Option<String>,
}

/// Parse the `id | input | expected | ref` fixture format.
pub fn parse_cases(text: &str) -> Result<Vec<FixtureCase>> {
    let mut cases = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(Error::Parse {
                pos: lineno + 1,
                msg: format!("expected 4 pipe-separated fields, got {}", fields.len()),
            });
        }
        let mut tier = None;
        let mut expected_fail = None;
        let mut checks = Vec::new();
        for tok in fields[2].split_whitespace() {
            let (key, value) = tok.split_once('=').ok_or(Error::Parse {
                pos: lineno + 1,
                msg: format!("expected key=value in checks, got {tok:?}"),
            })?;
            match key {
                "tier" => tier = Some(value.parse()?),
                "xfail" => expected_fail = Some(value.to_string()),
                _ => checks.push((key.to_string(), value.to_string())),
            }
        }
        cases.push(FixtureCase {
            id: fields[0].to_string(),
            input: fields[1].to_string(),
            tier: tier.ok_or(Error::Parse {
                pos: lineno + 1,
                msg: "missing tier= token".to_string(),
            })?,
            checks,
            reference: fields[3].to_string(),
            expected_fail,
        });
    }
    Ok(cases)
}

/// The fixture set shipped with the crate.
pub fn builtin_cases() -> Vec<FixtureCase> {
    parse_cases(include_str!("../fixtures/cases.txt")).expect("bundled fixtures parse")
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub id: String,
    pub tier: Tier,
    pub reference: String,
    pub outcomes: Vec<CheckOutcome>,
    pub expected_fail: Option<String>,
}

impl CaseResult {
    pub fn checks_matched(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    /// Overall verdict: ordinary cases must match; known-discrepancy cases
    /// must differ (a sudden match would mean the record is stale).
    pub fn passed(&self) -> bool {
        match &self.expected_fail {
            None => self.checks_matched(),
            Some(_) => !self.checks_matched(),
        }
    }
}

/// Lazily computed per-case context, so multi-check cases enumerate once.
struct Ctx {
    n: usize,
    desc: Option<CodeDescriptor>,
    code: Option<AccCode>,
    trace_code: Option<CyclicCode>,
    trace_dist: Option<MinDistance>,
    report: Option<TraceAnalysis>,
}

impl Ctx {
    fn new(input: &str) -> Result<Ctx> {
        // bare `n=14` inputs serve factorization checks
        let desc = if input.contains("g=") || input.contains("v=") {
            Some(input.parse::<CodeDescriptor>()?)
        } else {
            None
        };
        let n = match &desc {
            Some(d) => d.n,
            None => {
                let rest = input.trim().strip_prefix("n=").ok_or(Error::Parse {
                    pos: 0,
                    msg: format!("bad fixture input {input:?}"),
                })?;
                rest.parse().map_err(|_| Error::Parse {
                    pos: 2,
                    msg: format!("bad length {rest:?}"),
                })?
            }
        };
        Ok(Ctx {
            n,
            desc,
            code: None,
            trace_code: None,
            trace_dist: None,
            report: None,
        })
    }

    fn code(&mut self) -> Result<&AccCode> {
        if self.code.is_none() {
            let desc = self.desc.as_ref().ok_or(Error::Parse {
                pos: 0,
                msg: "check requires a code descriptor input".to_string(),
            })?;
            self.code = Some(desc.build()?);
        }
        Ok(self.code.as_ref().expect("just built"))
    }

    fn gen_poly(&mut self) -> Result<BinPoly> {
        Ok(self
            .code()?
            .image_gen()
            .expect("descriptor codes have generators")
            .clone())
    }

    fn trace_code(&mut self) -> Result<&CyclicCode> {
        if self.trace_code.is_none() {
            let code = self.code()?;
            self.trace_code = Some(tracecode::trace_code_of(code)?);
        }
        Ok(self.trace_code.as_ref().expect("just built"))
    }

    fn trace_distance(&mut self) -> Result<MinDistance> {
        if self.trace_dist.is_none() {
            let tc = self.trace_code()?.clone();
            self.trace_dist = Some(tracecode::min_distance(&tc, tc.dim()));
        }
        Ok(self.trace_dist.expect("just computed"))
    }

    fn report(&mut self) -> Result<&TraceAnalysis> {
        if self.report.is_none() {
            let code = self.code()?;
            self.report = Some(tracecode::duality_report(code)?);
        }
        Ok(self.report.as_ref().expect("just built"))
    }
}

fn poly_eq_check(expected: &str, actual: &BinPoly) -> Result<CheckOutcome> {
    let exp: BinPoly = expected.parse()?;
    Ok(CheckOutcome {
        key: String::new(),
        expected: exp.to_string(),
        actual: actual.to_string(),
        passed: exp == *actual,
    })
}

fn eq_outcome(expected: &str, actual: String) -> CheckOutcome {
    CheckOutcome {
        key: String::new(),
        expected: expected.to_string(),
        actual: actual.clone(),
        passed: expected == actual,
    }
}

fn run_check(ctx: &mut Ctx, key: &str, expected: &str) -> Result<CheckOutcome> {
    let mut outcome = match key {
        "factor" => {
            let canonical = format_factored(&factor::factor_xn_plus_1(ctx.n));
            eq_outcome(expected, canonical)
        }
        "eta" => {
            let g = ctx.gen_poly()?;
            let eta = acc::psi(&g.to_bitvec(2 * ctx.n)?)?;
            eq_outcome(expected, eta.to_string())
        }
        "acc_dims" => {
            let code = ctx.code()?;
            eq_outcome(expected, format!("[{},{}]", code.n(), code.dim()))
        }
        "acc" => {
            let code = ctx.code()?;
            let d = code.min_gray_distance(code.dim());
            eq_outcome(
                expected,
                format!("[{},{},{}]", code.n(), code.dim(), d),
            )
        }
        "acc_d" => {
            let code = ctx.code()?;
            eq_outcome(expected, code.min_gray_distance(code.dim()).to_string())
        }
        "acc_d_low" => {
            let claimed: usize = parse_num(expected)?;
            let g = ctx.gen_poly()?;
            let found = weight::cyclic_weight_at_most(&g, 2 * ctx.n, claimed);
            let actual = match found {
                Some(w) => w.to_string(),
                None => format!(">{claimed}"),
            };
            eq_outcome(expected, actual)
        }
        "acc_d_sample" => {
            let claimed: usize = parse_num(expected)?;
            let code = ctx.code()?;
            let rows: Vec<_> = code.gen_rows().iter().map(acc::phi_inv).collect();
            sample_outcome(claimed, weight::min_weight_sampled(&rows, SAMPLE_COUNT, SAMPLE_SEED))
        }
        "trace_dims" => {
            let tc = ctx.trace_code()?;
            eq_outcome(expected, format!("[{},{}]", tc.n(), tc.dim()))
        }
        "trace" => {
            let tc = ctx.trace_code()?.clone();
            let d = ctx.trace_distance()?;
            eq_outcome(expected, format!("[{},{},{}]", tc.n(), tc.dim(), d))
        }
        "trace_d" => eq_outcome(expected, ctx.trace_distance()?.to_string()),
        "trace_d_sample" => {
            let claimed: usize = parse_num(expected)?;
            let tc = ctx.trace_code()?;
            let rows: Vec<_> = (0..tc.dim()).map(|i| tc.generator_matrix().row(i).clone()).collect();
            sample_outcome(claimed, weight::min_weight_sampled(&rows, SAMPLE_COUNT, SAMPLE_SEED))
        }
        "r" => poly_eq_check(expected, &ctx.report()?.r.clone())?,
        "t" => poly_eq_check(expected, &ctx.report()?.t.clone())?,
        "dual_gen" => poly_eq_check(expected, &ctx.report()?.dual_gen.clone())?,
        "strict" => eq_outcome(expected, ctx.report()?.inclusion_strict.to_string()),
        "equal" => eq_outcome(expected, ctx.report()?.equality_condition.to_string()),
        "lcd" => eq_outcome(expected, ctx.report()?.lcd.to_string()),
        "r_self_recip" => {
            eq_outcome(expected, ctx.report()?.r.is_self_reciprocal().to_string())
        }
        "acd" => eq_outcome(expected, ctx.code()?.is_acd().to_string()),
        "self_orthogonal" => {
            eq_outcome(expected, ctx.code()?.duality_class().self_orthogonal.to_string())
        }
        "dual_containing" => {
            eq_outcome(expected, ctx.code()?.duality_class().dual_containing.to_string())
        }
        "self_dual" => {
            eq_outcome(expected, ctx.code()?.duality_class().self_dual.to_string())
        }
        "hspan" => {
            let rows: Vec<F4Vector> = expected
                .split(';')
                .map(|r| r.parse())
                .collect::<Result<_>>()?;
            let expected_code = AccCode::from_rows(ctx.n, rows)?;
            let dual = ctx.code()?.trace_dual();
            CheckOutcome {
                key: String::new(),
                expected: expected.to_string(),
                actual: dual
                    .gen_rows()
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
                passed: dual.same_code(&expected_code),
            }
        }
        "rank1" | "rank2" | "acp_necessary" => {
            let g = ctx.gen_poly()?;
            let check = acc::acp_rank_check(&g, ctx.n)?;
            let actual = match key {
                "rank1" => check.rank1.to_string(),
                "rank2" => check.rank2.to_string(),
                _ => check.necessary_condition_met.to_string(),
            };
            eq_outcome(expected, actual)
        }
        "hull" => eq_outcome(expected, ctx.code()?.hull()?.dim().to_string()),
        "hull_rank" => eq_outcome(expected, ctx.code()?.hull_dim_via_rank().to_string()),
        "ggt_rank" => {
            let gm = ctx.code()?.generator_matrix();
            let rank = trace_mat_mul(&gm, &gm.transpose())?.rank();
            eq_outcome(expected, rank.to_string())
        }
        "eaqec" => {
            let tc = ctx.trace_code()?.clone();
            let d = ctx.trace_distance()?;
            let params = eaqec::eaqec_from_trace(&tc, d.value());
            eq_outcome(expected, params.to_string())
        }
        "maximal" => {
            let tc = ctx.trace_code()?.clone();
            let d = ctx.trace_distance()?;
            let params = eaqec::eaqec_from_trace(&tc, d.value());
            eq_outcome(expected, params.is_maximal_entanglement().to_string())
        }
        _ => CheckOutcome {
            key: String::new(),
            expected: expected.to_string(),
            actual: format!("unknown check key {key:?}"),
            passed: false,
        },
    };
    outcome.key = key.to_string();
    Ok(outcome)
}

fn parse_num(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("expected a number, got {s:?}"),
    })
}

/// A sampled bound passes when it does not undercut the claimed distance:
/// the sample proves d <= bound, so a claim above the bound is refuted and a
/// claim at or below it is consistent.
fn sample_outcome(claimed: usize, bound: Option<usize>) -> CheckOutcome {
    match bound {
        Some(u) => CheckOutcome {
            key: String::new(),
            expected: format!("<={claimed}"),
            actual: format!("sampled upper bound {u}"),
            passed: u >= claimed,
        },
        None => CheckOutcome {
            key: String::new(),
            expected: format!("<={claimed}"),
            actual: "zero code".to_string(),
            passed: false,
        },
    }
}

pub fn run_case(case: &FixtureCase) -> CaseResult {
    let mut outcomes = Vec::new();
    match Ctx::new(&case.input) {
        Ok(mut ctx) => {
            for (key, expected) in &case.checks {
                match run_check(&mut ctx, key, expected) {
                    Ok(outcome) => outcomes.push(outcome),
                    Err(e) => outcomes.push(CheckOutcome {
                        key: key.clone(),
                        expected: expected.clone(),
                        actual: format!("error: {e}"),
                        passed: false,
                    }),
                }
            }
        }
        Err(e) => outcomes.push(CheckOutcome {
            key: "input".to_string(),
            expected: case.input.clone(),
            actual: format!("error: {e}"),
            passed: false,
        }),
    }
    CaseResult {
        id: case.id.clone(),
        tier: case.tier,
        reference: case.reference.clone(),
        outcomes,
        expected_fail: case.expected_fail.clone(),
    }
}

/// Run every bundled case at or below the tier.
pub fn run_tier(tier: Tier) -> Vec<CaseResult> {
    builtin_cases()
        .iter()
        .filter(|c| c.tier <= tier)
        .map(run_case)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_parse() {
        let cases = builtin_cases();
        assert!(cases.len() > 20);
        for case in &cases {
            assert!(!case.id.is_empty());
            assert!(!case.checks.is_empty(), "case {} has no checks", case.id);
        }
    }

    #[test]
    fn parse_rejects_malformed_lines() {
        assert!(parse_cases("id | input | tier=fast x=1").is_err());
        assert!(parse_cases("id | n=3 | x=1 | ref").is_err()); // missing tier
        let ok = parse_cases("# comment\n\nid | n=3 v=W,w,0 | tier=fast acc_dims=[3,4] | ref").unwrap();
        assert_eq!(ok.len(), 1);
        assert_eq!(ok[0].tier, Tier::Fast);
    }

    #[test]
    fn worked_example_cases_pass() {
        for case in builtin_cases() {
            if case.tier == Tier::Fast && case.reference.contains("example") {
                let result = run_case(&case);
                assert!(
                    result.passed(),
                    "case {} failed: {:?}",
                    result.id,
                    result
                        .outcomes
                        .iter()
                        .filter(|o| !o.passed)
                        .collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn tier_ordering() {
        assert!(Tier::Fast < Tier::Extended);
        assert!(Tier::Extended < Tier::DimsOnly);
        assert_eq!("dims-only".parse::<Tier>().unwrap(), Tier::DimsOnly);
    }

    #[test]
    fn mismatches_and_errors_are_reported() {
        let cases =
            parse_cases("bad | n=7 g=1+x^14 | tier=fast acc_dims=[7,99] | synthetic").unwrap();
        let r = run_case(&cases[0]);
        assert!(!r.passed());
        assert_eq!(r.outcomes[0].actual, "[7,0]");
        // a generator that does not divide x^{2n}+1 surfaces the error text
        let cases =
            parse_cases("bad2 | n=7 g=1+x+x^2 | tier=fast acc_dims=[7,1] | synthetic").unwrap();
        let r = run_case(&cases[0]);
        assert!(!r.passed());
        assert!(r.outcomes[0].actual.contains("does not divide"));
        // an xfail case passes exactly when the checks differ
        let cases = parse_cases(
            "bad3 | n=7 g=1+x^14 | tier=fast xfail=demo acc_dims=[7,99] | synthetic",
        )
        .unwrap();
        assert!(run_case(&cases[0]).passed());
        let cases = parse_cases(
            "bad4 | n=7 g=1+x^14 | tier=fast xfail=stale acc_dims=[7,0] | synthetic",
        )
        .unwrap();
        assert!(!run_case(&cases[0]).passed());
    }
}
