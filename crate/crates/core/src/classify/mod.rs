//! Placement of a function in the ladder of Pilipović and Gelfand–Shilov
//! spaces from the decay of its Hermite coefficients.
//!
//! Every space of the ladder is described by a coefficient condition:
//!
//! | space | `|c_α| ≲` |
//! |---|---|
//! | `𝒮_0` | finitely many nonzero coefficients |
//! | `𝒮_s` (Roumieu) | `e^{−r|α|^{1/(2s)}}` for some `r > 0` |
//! | `𝚺_s` (Beurling) | `e^{−r|α|^{1/(2s)}}` for every `r > 0` |
//! | `ℋ_♭` | `R^{|α|}/√α!` for some `R > 0` |
//! | `ℋ_{0,♭}` | `R^{|α|}/√α!` for every `R > 0` |
//!
//! and the duals by the mirrored growth conditions (`e^{+r|α|^{1/(2s)}}` for
//! every `r` in `𝒮_s′`, for some `r` in `𝚺_s′`, `R^{|α|}√α!` for every `R`
//! in `ℋ_♭′`, for some `R` in `ℋ_{0,♭}′`). The Roumieu space `𝒮_s` uses
//! "for some `r`", as the coefficient characterization of its dual requires.
//!
//! "For every `r`" cannot be decided from finitely many coefficients. The
//! classifier fits the rate on advancing windows `[W, 2W]` of total degree
//! and reads the asymptotics from how the fitted rate moves: a Beurling
//! condition needs the rate to climb by more than `tol` from window to
//! window, a Roumieu condition needs it to stay above `tol` without fading.
//! Anything in between is `borderline`. The raw verdicts are then made
//! monotone along the ladder, and every adjusted entry is flagged.

mod equiv;
mod fit;
mod gaussian;
pub(crate) mod profile;

pub use equiv::{equiv_backward_check, equiv_forward_check, BackwardReport, ForwardReport};
pub use fit::{fit_decay, DecayFit, DecayModel, DEFAULT_S_GRID, MIN_FIT_POINTS};
pub use gaussian::{gaussian_membership, GaussianMembership, EIGENVALUE_TOLERANCE};

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};
use crate::HermiteExpansion;
use fit::least_squares;
use profile::CoefficientProfile;

/// Default resolution of the fitted rates.
pub const DEFAULT_TOL: f64 = 0.05;
/// Coefficients below this fraction of the running maximum are noise.
pub const DEFAULT_NOISE_FLOOR: f64 = 1e-13;
/// Window starts as fractions of the last significant degree.
pub const WINDOW_FRACTIONS: [f64; 3] = [1.0 / 6.0, 1.0 / 3.0, 0.5];
/// Points a window needs before its rate is trusted.
pub const MIN_WINDOW_POINTS: usize = 3;
/// Relative drop of a positive rate still read as stabilization.
pub const STABLE_DROP: f64 = 0.1;
/// Relative drop of a positive rate read as fading to zero.
pub const FADING_DROP: f64 = 0.2;
/// Exponents `s` of the `𝒮_s` and `𝚺_s` labels on the ladder.
pub const LADDER_S: [f64; 4] = [0.25, 0.5, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpaceLabel {
    /// `𝒮_0 = ℋ_0`, finite Hermite expansions.
    S0,
    /// Roumieu `𝒮_s`.
    S(f64),
    /// Beurling `𝚺_s`, `s ≠ 1/2`.
    Sigma(f64),
    /// `𝚺 = 𝚺_{1/2}`.
    SigmaHalf,
    HFlat0,
    HFlat,
    S0Dual,
    SDual(f64),
    SigmaDual(f64),
    SigmaHalfDual,
    HFlat0Dual,
    HFlatDual,
}

impl SpaceLabel {
    pub fn is_dual(&self) -> bool {
        matches!(
            self,
            SpaceLabel::S0Dual
                | SpaceLabel::SDual(_)
                | SpaceLabel::SigmaDual(_)
                | SpaceLabel::SigmaHalfDual
                | SpaceLabel::HFlat0Dual
                | SpaceLabel::HFlatDual
        )
    }

    /// The test-function spaces in increasing order of inclusion.
    pub fn test_ladder() -> Vec<SpaceLabel> {
        let mut out = vec![SpaceLabel::S0];
        for &s in LADDER_S.iter().filter(|&&s| s < 0.5) {
            out.push(SpaceLabel::Sigma(s));
            out.push(SpaceLabel::S(s));
        }
        out.extend([SpaceLabel::HFlat0, SpaceLabel::HFlat, SpaceLabel::SigmaHalf, SpaceLabel::S(0.5)]);
        for &s in LADDER_S.iter().filter(|&&s| s > 0.5) {
            out.push(SpaceLabel::Sigma(s));
            out.push(SpaceLabel::S(s));
        }
        out
    }

    /// The whole chain: test spaces, then their duals in reverse order.
    pub fn ladder() -> Vec<SpaceLabel> {
        let test = Self::test_ladder();
        let mut out = test.clone();
        out.extend(test.iter().rev().map(|l| l.dual()));
        out
    }

    pub fn dual(&self) -> SpaceLabel {
        match *self {
            SpaceLabel::S0 => SpaceLabel::S0Dual,
            SpaceLabel::S(s) => SpaceLabel::SDual(s),
            SpaceLabel::Sigma(s) => SpaceLabel::SigmaDual(s),
            SpaceLabel::SigmaHalf => SpaceLabel::SigmaHalfDual,
            SpaceLabel::HFlat0 => SpaceLabel::HFlat0Dual,
            SpaceLabel::HFlat => SpaceLabel::HFlatDual,
            SpaceLabel::S0Dual => SpaceLabel::S0,
            SpaceLabel::SDual(s) => SpaceLabel::S(s),
            SpaceLabel::SigmaDual(s) => SpaceLabel::Sigma(s),
            SpaceLabel::SigmaHalfDual => SpaceLabel::SigmaHalf,
            SpaceLabel::HFlat0Dual => SpaceLabel::HFlat0,
            SpaceLabel::HFlatDual => SpaceLabel::HFlat,
        }
    }
}

fn fmt_s(s: f64) -> String {
    for den in [1u32, 2, 3, 4, 6, 8] {
        let num = s * den as f64;
        if (num - num.round()).abs() < 1e-12 {
            return if den == 1 {
                format!("{}", num.round())
            } else {
                format!("{}/{}", num.round(), den)
            };
        }
    }
    format!("{s}")
}

impl fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceLabel::S0 => write!(f, "S_0"),
            SpaceLabel::S(s) => write!(f, "S_{{{}}}", fmt_s(*s)),
            SpaceLabel::Sigma(s) => write!(f, "Sigma_{{{}}}", fmt_s(*s)),
            SpaceLabel::SigmaHalf => write!(f, "Sigma"),
            SpaceLabel::HFlat0 => write!(f, "H_{{0,flat}}"),
            SpaceLabel::HFlat => write!(f, "H_flat"),
            dual => write!(f, "{}'", dual.dual()),
        }
    }
}

impl Serialize for SpaceLabel {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
    Borderline,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabelVerdict {
    pub space: SpaceLabel,
    pub verdict: Verdict,
    /// Verdict before the ladder closure.
    pub raw: Verdict,
    /// `verdict != raw`.
    pub adjusted: bool,
    /// Fitted rates on the successive windows that decided the raw verdict.
    pub rates: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Caveat {
    pub cutoff: u32,
    pub tol: f64,
    pub noise_floor: f64,
    pub last_significant_degree: Option<u32>,
    pub windows: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    /// Verdicts in ladder order, smallest space first.
    pub verdicts: Vec<LabelVerdict>,
    pub fits: Vec<DecayFit>,
    pub caveat: Caveat,
    /// Algebraic criterion, filled in when the input was a Gaussian.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gaussian: Option<GaussianMembership>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn verdict(&self, space: SpaceLabel) -> Option<Verdict> {
        self.verdicts.iter().find(|v| v.space == space).map(|v| v.verdict)
    }

    /// Whether members form an upper set and non-members a lower set of the
    /// ladder, with nothing but borderline entries between them.
    pub fn is_monotone(&self) -> bool {
        let first_member = self.verdicts.iter().position(|v| v.verdict == Verdict::Member);
        let last_non = self.verdicts.iter().rposition(|v| v.verdict == Verdict::NonMember);
        let members_closed = match first_member {
            Some(i) => self.verdicts[i..].iter().all(|v| v.verdict == Verdict::Member),
            None => true,
        };
        let non_closed = match last_non {
            Some(j) => self.verdicts[..=j].iter().all(|v| v.verdict == Verdict::NonMember),
            None => true,
        };
        members_closed && non_closed
    }

    /// Same spaces with the same verdicts.
    pub fn same_verdicts(&self, other: &Self) -> bool {
        self.verdicts.len() == other.verdicts.len()
            && self
                .verdicts
                .iter()
                .zip(&other.verdicts)
                .all(|(a, b)| a.space == b.space && a.verdict == b.verdict)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    pub tol: f64,
    pub noise_floor: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            noise_floor: DEFAULT_NOISE_FLOOR,
        }
    }
}

/// Classifies with the default noise floor.
pub fn classify(e: &HermiteExpansion, tol: f64) -> Result<ClassificationReport> {
    classify_with(
        e,
        &ClassifyOptions {
            tol,
            ..ClassifyOptions::default()
        },
    )
}

pub fn classify_with(e: &HermiteExpansion, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    if !(opts.tol > 0.0 && opts.tol.is_finite()) {
        return Err(invalid("tol", "must be positive and finite"));
    }
    if !(opts.noise_floor >= 0.0 && opts.noise_floor < 1.0) {
        return Err(invalid("noise_floor", "must lie in [0, 1)"));
    }
    let profile = CoefficientProfile::new(e, opts.noise_floor);
    let mut notes = Vec::new();
    let fits = match fit::fit_profile(&profile, &DEFAULT_S_GRID) {
        Ok(f) => f,
        Err(err) => {
            notes.push(format!("no decay fit: {err}"));
            Vec::new()
        }
    };
    let top = profile.last_significant().unwrap_or(0);
    let windows = windows(top);
    let ladder = SpaceLabel::ladder();

    let raw: Vec<(Verdict, Vec<f64>)> = if profile.finite_degree().is_some() {
        ladder.iter().map(|_| (Verdict::Member, Vec::new())).collect()
    } else {
        let ev = Evidence::new(&profile, &windows, opts.tol);
        if !ev.sufficient() {
            notes.push(format!(
                "only degrees up to {top} are significant; too few windows to read asymptotic rates"
            ));
        }
        ladder.iter().map(|l| ev.raw_verdict(*l)).collect()
    };
    if profile.finite_degree().is_none() && e.cutoff() == top && !e.is_empty() {
        notes.push("significant coefficients reach the cutoff; finite support cannot be confirmed".into());
    }
    notes.push("the harmonic-oscillator bound listed for H_flat is informational and is not checked".into());

    let closed = close_ladder(&raw.iter().map(|r| r.0).collect::<Vec<_>>());
    let verdicts = ladder
        .into_iter()
        .zip(raw)
        .zip(closed)
        .map(|((space, (raw, rates)), verdict)| LabelVerdict {
            space,
            verdict,
            raw,
            adjusted: verdict != raw,
            rates,
        })
        .collect();
    Ok(ClassificationReport {
        verdicts,
        fits,
        caveat: Caveat {
            cutoff: e.cutoff(),
            tol: opts.tol,
            noise_floor: opts.noise_floor,
            last_significant_degree: profile.last_significant(),
            windows,
        },
        gaussian: None,
        notes,
    })
}

/// Windows `[W, min(2W, K)]` with `W = round(K·f)`, duplicates removed.
pub fn windows(top: u32) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for f in WINDOW_FRACTIONS {
        let w = ((top as f64 * f).round() as u32).max(1);
        let win = (w, (2 * w).min(top));
        if win.0 < win.1 && !out.contains(&win) {
            out.push(win);
        }
    }
    out
}

/// Membership propagates to larger spaces, then non-membership to smaller ones.
fn close_ladder(raw: &[Verdict]) -> Vec<Verdict> {
    let mut out = raw.to_vec();
    if let Some(i) = out.iter().position(|v| *v == Verdict::Member) {
        for v in &mut out[i..] {
            *v = Verdict::Member;
        }
    }
    if let Some(j) = out.iter().rposition(|v| *v == Verdict::NonMember) {
        for v in &mut out[..=j] {
            *v = Verdict::NonMember;
        }
    }
    out
}

/// Windowed rates for each decay family, shared by all labels.
struct Evidence {
    tol: f64,
    /// `−ln m_k` against `k^{1/(2s)}`, per ladder exponent.
    decay: Vec<(f64, Vec<f64>)>,
    /// `min_{|α|=k} (−ln|c_α| − ½ ln α!)` against `k`.
    factorial_decay: Vec<f64>,
    /// `max_{|α|=k} (ln|c_α| − ½ ln α!)` against `k`.
    factorial_growth: Vec<f64>,
}

impl Evidence {
    fn new(p: &CoefficientProfile, windows: &[(u32, u32)], tol: f64) -> Self {
        let y = p.degree_extreme(true, |_, l| l);
        let neg_y: Vec<Option<f64>> = y.iter().map(|v| v.map(|l| -l)).collect();
        let decay = LADDER_S
            .iter()
            .map(|&s| (s, window_rates(&neg_y, windows, |k| k.powf(0.5 / s))))
            .collect();
        let fd = p.degree_extreme(false, |a, l| -l - 0.5 * a.ln_factorial());
        let fg = p.degree_extreme(true, |a, l| l - 0.5 * a.ln_factorial());
        Self {
            tol,
            decay,
            factorial_decay: window_rates(&fd, windows, |k| k),
            factorial_growth: window_rates(&fg, windows, |k| k),
        }
    }

    fn sufficient(&self) -> bool {
        self.factorial_decay.len() >= 2
    }

    fn decay_rates(&self, s: f64) -> Vec<f64> {
        self.decay
            .iter()
            .find(|(t, _)| (t - s).abs() < 1e-12)
            .map(|(_, r)| r.clone())
            .unwrap_or_default()
    }

    fn raw_verdict(&self, label: SpaceLabel) -> (Verdict, Vec<f64>) {
        let tol = self.tol;
        let negated = |r: Vec<f64>| r.into_iter().map(|x| -x).collect::<Vec<_>>();
        let (rates, verdict): (Vec<f64>, fn(&Trend, f64) -> Verdict) = match label {
            SpaceLabel::S0 => return (Verdict::NonMember, Vec::new()),
            SpaceLabel::S0Dual => return (Verdict::Member, Vec::new()),
            SpaceLabel::S(s) => (self.decay_rates(s), rate_for_some),
            SpaceLabel::Sigma(s) => (self.decay_rates(s), rate_for_every),
            SpaceLabel::SigmaHalf => (self.decay_rates(0.5), rate_for_every),
            SpaceLabel::HFlat => (self.factorial_decay.clone(), slope_bounded_below),
            SpaceLabel::HFlat0 => (self.factorial_decay.clone(), slope_unbounded_above),
            SpaceLabel::SDual(s) => (negated(self.decay_rates(s)), growth_for_every),
            SpaceLabel::SigmaDual(s) => (negated(self.decay_rates(s)), growth_for_some),
            SpaceLabel::SigmaHalfDual => (negated(self.decay_rates(0.5)), growth_for_some),
            SpaceLabel::HFlatDual => (self.factorial_growth.clone(), slope_unbounded_below),
            SpaceLabel::HFlat0Dual => (self.factorial_growth.clone(), slope_bounded_above),
        };
        if rates.len() < 2 {
            return (Verdict::Borderline, rates);
        }
        let trend = Trend::new(&rates, tol);
        (verdict(&trend, tol), rates)
    }
}

fn window_rates<F: Fn(f64) -> f64>(values: &[Option<f64>], windows: &[(u32, u32)], feature: F) -> Vec<f64> {
    windows
        .iter()
        .filter_map(|&(lo, hi)| {
            let pts: Vec<(f64, f64)> = (lo..=hi)
                .filter_map(|k| values.get(k as usize).copied().flatten().map(|v| (feature(k as f64), v)))
                .collect();
            if pts.len() < MIN_WINDOW_POINTS {
                return None;
            }
            least_squares(pts).map(|l| l.slope)
        })
        .collect()
}

/// How a sequence of windowed rates moves.
struct Trend {
    last: f64,
    /// Every step climbs by more than `tol`.
    climbing: bool,
    /// No step climbs by more than `tol`.
    flat_or_falling: bool,
    /// Every step falls by more than `tol`.
    falling: bool,
    /// No step falls by more than `tol`.
    flat_or_climbing: bool,
    /// Largest single drop and rise.
    max_drop: f64,
    max_rise: f64,
    /// No positive rate drops by more than `STABLE_DROP` relative.
    stable: bool,
    /// Some positive rate drops by more than `FADING_DROP` relative.
    fading: bool,
}

impl Trend {
    fn new(r: &[f64], tol: f64) -> Self {
        let steps: Vec<(f64, f64)> = r.windows(2).map(|w| (w[0], w[1] - w[0])).collect();
        let rel_drop = |(from, d): (f64, f64)| if d < 0.0 && from > 0.0 { -d / from } else { 0.0 };
        Self {
            last: *r.last().expect("at least two rates"),
            climbing: steps.iter().all(|s| s.1 > tol),
            flat_or_falling: steps.iter().all(|s| s.1 <= tol),
            falling: steps.iter().all(|s| s.1 < -tol),
            flat_or_climbing: steps.iter().all(|s| s.1 >= -tol),
            max_drop: steps.iter().map(|s| -s.1).fold(f64::NEG_INFINITY, f64::max),
            max_rise: steps.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max),
            stable: steps.iter().all(|&s| rel_drop(s) <= STABLE_DROP),
            fading: steps.iter().any(|&s| rel_drop(s) > FADING_DROP),
        }
    }
}

/// Decay rate positive in the limit (Roumieu).
fn rate_for_some(t: &Trend, tol: f64) -> Verdict {
    if t.last > tol && (t.climbing || t.stable) {
        Verdict::Member
    } else if t.last <= tol || t.fading {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

/// Decay rate unbounded (Beurling).
fn rate_for_every(t: &Trend, tol: f64) -> Verdict {
    if t.last > tol && t.climbing {
        Verdict::Member
    } else if t.flat_or_falling || t.last <= tol {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

/// Growth rate non-positive in the limit.
fn growth_for_every(t: &Trend, tol: f64) -> Verdict {
    if (t.last <= tol && t.flat_or_falling) || (t.last > tol && t.fading) {
        Verdict::Member
    } else if t.last > tol && (t.climbing || t.stable) {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

/// Growth rate bounded.
fn growth_for_some(t: &Trend, tol: f64) -> Verdict {
    if t.flat_or_falling {
        Verdict::Member
    } else if t.climbing && t.last > tol {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

/// `ln R̂` bounded below: some radius works.
fn slope_bounded_below(t: &Trend, tol: f64) -> Verdict {
    if t.flat_or_climbing {
        Verdict::Member
    } else if t.max_drop > 3.0 * tol {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

/// `−ln R̂ → ∞`: every radius works.
fn slope_unbounded_above(t: &Trend, _tol: f64) -> Verdict {
    if t.climbing {
        Verdict::Member
    } else if t.flat_or_falling {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

/// Growth radius bounded: some radius works.
fn slope_bounded_above(t: &Trend, tol: f64) -> Verdict {
    if t.flat_or_falling {
        Verdict::Member
    } else if t.max_rise > 3.0 * tol {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

/// Growth radius shrinking to zero: every radius works.
fn slope_unbounded_below(t: &Trend, _tol: f64) -> Verdict {
    if t.falling {
        Verdict::Member
    } else if t.flat_or_climbing {
        Verdict::NonMember
    } else {
        Verdict::Borderline
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::CoefficientRule;
    use crate::MultiIndex;
    use num_complex::Complex64;

    fn verdict(r: &ClassificationReport, l: SpaceLabel) -> Verdict {
        r.verdict(l).unwrap()
    }

    #[test]
    fn ladder_is_a_chain_with_reversed_duals() {
        let l = SpaceLabel::ladder();
        assert_eq!(l.len(), 22);
        assert_eq!(l[0], SpaceLabel::S0);
        assert_eq!(*l.last().unwrap(), SpaceLabel::S0Dual);
        let t = SpaceLabel::test_ladder();
        for (i, x) in t.iter().enumerate() {
            assert_eq!(l[l.len() - 1 - i], x.dual());
        }
        assert_eq!(SpaceLabel::S(0.25).to_string(), "S_{1/4}");
        assert_eq!(SpaceLabel::SigmaHalfDual.to_string(), "Sigma'");
    }

    #[test]
    fn windows_scale_with_the_significant_degree() {
        assert_eq!(windows(48), vec![(8, 16), (16, 32), (24, 48)]);
        assert_eq!(windows(29), vec![(5, 10), (10, 20), (15, 29)]);
    }

    #[test]
    fn closure_is_monotone() {
        use Verdict::*;
        let raw = [NonMember, Borderline, Member, NonMember, Borderline, Member];
        let c = close_ladder(&raw);
        assert_eq!(c, vec![NonMember, Borderline, Member, Member, Member, Member]);
        let raw = [Borderline, NonMember, Borderline, Borderline];
        assert_eq!(close_ladder(&raw), vec![NonMember, NonMember, Borderline, Borderline]);
    }

    #[test]
    fn finite_combination_is_in_s0() {
        let e = HermiteExpansion::from_terms(
            1,
            40,
            [
                (MultiIndex::single(0), Complex64::new(1.0, 0.0)),
                (MultiIndex::single(3), Complex64::new(2.0, 0.0)),
            ],
        )
        .unwrap();
        let r = classify(&e, DEFAULT_TOL).unwrap();
        assert!(r.verdicts.iter().all(|v| v.verdict == Verdict::Member));
    }

    #[test]
    fn geometric_decay_is_roumieu_half() {
        let e = CoefficientRule::StretchedExp { r: 1.0, s: 0.5, scale: 1.0 }.expansion(1, 40);
        let r = classify(&e, DEFAULT_TOL).unwrap();
        assert_eq!(verdict(&r, SpaceLabel::S(0.5)), Verdict::Member);
        assert_eq!(verdict(&r, SpaceLabel::SigmaHalf), Verdict::NonMember);
        assert_eq!(verdict(&r, SpaceLabel::HFlat), Verdict::NonMember);
        assert_eq!(verdict(&r, SpaceLabel::S0), Verdict::NonMember);
        assert!(r.is_monotone());
    }

    #[test]
    fn factorial_decay_is_h_flat_only() {
        let e = CoefficientRule::Factorial { radius: 2.0, scale: 1.0 }.expansion(1, 40);
        let r = classify(&e, DEFAULT_TOL).unwrap();
        assert_eq!(verdict(&r, SpaceLabel::HFlat), Verdict::Member);
        assert_eq!(verdict(&r, SpaceLabel::HFlat0), Verdict::NonMember);
        assert_eq!(verdict(&r, SpaceLabel::SigmaHalf), Verdict::Member);
    }

    #[test]
    fn factorial_growth_is_dual_side() {
        let e = CoefficientRule::FactorialGrowth { radius: 0.5, scale: 1.0 }.expansion(2, 30);
        let r = classify(&e, DEFAULT_TOL).unwrap();
        for l in SpaceLabel::test_ladder() {
            assert_eq!(verdict(&r, l), Verdict::NonMember, "{l}");
        }
        assert_eq!(verdict(&r, SpaceLabel::HFlat0Dual), Verdict::Member);
        assert_eq!(verdict(&r, SpaceLabel::HFlatDual), Verdict::NonMember);
        assert!(r.is_monotone());
    }

    #[test]
    fn slow_root_decay_is_not_in_s_half() {
        let e = CoefficientRule::StretchedExp { r: 1.0, s: 1.0, scale: 1.0 }.expansion(1, 40);
        let r = classify(&e, DEFAULT_TOL).unwrap();
        assert_eq!(verdict(&r, SpaceLabel::S(1.0)), Verdict::Member);
        assert_eq!(verdict(&r, SpaceLabel::S(0.5)), Verdict::NonMember);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let e = HermiteExpansion::basis(MultiIndex::single(0));
        assert!(classify(&e, 0.0).is_err());
    }
}
