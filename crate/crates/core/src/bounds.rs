//! Arithmetic for the additive error term of the recovery guarantee.
//!
//! The constants are
//!
//! | symbol | value |
//! |--------|-------|
//! | `C`    | `1 + ε` (or `2`) |
//! | `C₁`   | `(1 + C)·sqrt(1 − α − β)` |
//! | `C₂`   | `(1 + C)·sqrt(β)` |
//! | `ψ`    | `(α / γ)·max‖B_i‖²` |
//! | `η`    | `C₁·δ² / min‖B_i‖ + C₂·ψ` |
//!
//! with the false-positive rate `β ≤ 2·exp(−c²/2)` unless supplied.

use crate::error::{usage, Result};

/// Which value to use for the cross-term constant `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrossTermConstant {
    #[default]
    OnePlusEpsilon,
    /// The looser `C = 2`.
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryBoundInputs {
    pub epsilon: f64,
    pub alpha: f64,
    /// Normalized gap `Δ / max‖B_i‖`.
    pub gamma: f64,
    /// Inlier noise bound.
    pub delta: f64,
    /// Signal-to-noise floor `‖B_i‖ >= κ·δ`.
    pub kappa: f64,
    /// Threshold constant.
    pub c: f64,
    pub max_clean_norm: f64,
    pub min_clean_norm: f64,
    pub beta_override: Option<f64>,
    pub cross_term: CrossTermConstant,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryBoundResult {
    pub beta: f64,
    pub c: f64,
    pub c1: f64,
    pub c2: f64,
    pub psi: f64,
    pub eta: f64,
}

/// `min(2·exp(−c²/2), 1)`.
pub fn false_positive_bound(c: f64) -> f64 {
    (2.0 * (-0.5 * c * c).exp()).min(1.0)
}

/// Smallest `κ = 4(1 + ε)/ε` that keeps the cross term under control.
pub fn kappa_condition(epsilon: f64) -> f64 {
    4.0 * (1.0 + epsilon) / epsilon
}

fn check(inp: &TheoryBoundInputs) -> Result<()> {
    let all = [
        inp.epsilon,
        inp.alpha,
        inp.gamma,
        inp.delta,
        inp.kappa,
        inp.c,
        inp.max_clean_norm,
        inp.min_clean_norm,
    ];
    if all.iter().any(|x| !x.is_finite()) {
        return usage("bound inputs must be finite");
    }
    if !(inp.epsilon > 0.0 && inp.epsilon < 1.0) {
        return usage(format!("epsilon must lie in (0, 1), got {}", inp.epsilon));
    }
    if !(0.0..0.5).contains(&inp.alpha) {
        return usage(format!("alpha must lie in [0, 0.5), got {}", inp.alpha));
    }
    if inp.gamma <= 0.0 {
        return usage("gamma must be positive; psi diverges at zero gap");
    }
    if inp.kappa <= 1.0 {
        return usage(format!("kappa must exceed 1, got {}", inp.kappa));
    }
    if inp.c <= 0.0 {
        return usage("threshold constant must be positive");
    }
    if inp.delta < 0.0 {
        return usage("noise bound must be nonnegative");
    }
    if !(inp.min_clean_norm > 0.0 && inp.min_clean_norm <= inp.max_clean_norm) {
        return usage("need 0 < min_clean_norm <= max_clean_norm");
    }
    if let Some(b) = inp.beta_override {
        if !(0.0..=1.0).contains(&b) {
            return usage(format!("beta override must lie in [0, 1], got {b}"));
        }
    }
    Ok(())
}

pub fn eta_bound(inp: &TheoryBoundInputs) -> Result<TheoryBoundResult> {
    check(inp)?;
    let beta = inp.beta_override.unwrap_or_else(|| false_positive_bound(inp.c));
    if inp.alpha + beta >= 1.0 {
        return usage(format!(
            "alpha + beta = {} must stay below 1",
            inp.alpha + beta
        ));
    }
    let c = match inp.cross_term {
        CrossTermConstant::OnePlusEpsilon => 1.0 + inp.epsilon,
        CrossTermConstant::Two => 2.0,
    };
    let c1 = (1.0 + c) * (1.0 - inp.alpha - beta).sqrt();
    let c2 = (1.0 + c) * beta.sqrt();
    let psi = inp.alpha / inp.gamma * inp.max_clean_norm * inp.max_clean_norm;
    let eta = c1 * inp.delta * inp.delta / inp.min_clean_norm + c2 * psi;
    Ok(TheoryBoundResult {
        beta,
        c,
        c1,
        c2,
        psi,
        eta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> TheoryBoundInputs {
        TheoryBoundInputs {
            epsilon: 0.1,
            alpha: 0.1,
            gamma: 2.0,
            delta: 1.0,
            kappa: 5.0,
            c: 3.0,
            max_clean_norm: 5.0,
            min_clean_norm: 5.0,
            beta_override: Some(0.0027),
            cross_term: CrossTermConstant::Two,
        }
    }

    #[test]
    fn worked_example_values() {
        let r = eta_bound(&worked_example()).unwrap();
        assert!((r.c1 - 2.85).abs() <= 0.01, "{}", r.c1);
        assert!((r.c2 - 0.16).abs() <= 0.01, "{}", r.c2);
        assert_eq!(r.psi, 1.25);
        assert!((r.eta - 0.77).abs() <= 0.01, "{}", r.eta);
        assert_eq!(r.c, 2.0);
    }

    #[test]
    fn false_positive_examples() {
        assert!((false_positive_bound(3.0) - 0.022218).abs() < 1e-6);
        // 2·e^{-3.125} = 0.0878739...
        assert!((false_positive_bound(2.5) - 0.087_873_9).abs() < 1e-6);
        assert_eq!(false_positive_bound(1e-9), 1.0);
    }

    #[test]
    fn kappa_examples() {
        assert!((kappa_condition(0.1) - 44.0).abs() < 1e-12);
        assert!((kappa_condition(0.5) - 12.0).abs() < 1e-12);
        assert!((kappa_condition(1.0 - 1e-12) - 8.0).abs() < 1e-9);
    }

    #[test]
    fn no_outliers_and_noiseless() {
        let inp = TheoryBoundInputs {
            alpha: 0.0,
            beta_override: Some(0.0),
            cross_term: CrossTermConstant::OnePlusEpsilon,
            ..worked_example()
        };
        let r = eta_bound(&inp).unwrap();
        assert_eq!(r.c2, 0.0);
        assert!((r.eta - 2.1 * 1.0 / 5.0).abs() < 1e-15);
        let r = eta_bound(&TheoryBoundInputs { delta: 0.0, ..inp }).unwrap();
        assert_eq!(r.eta, 0.0);
    }

    #[test]
    fn default_beta_uses_tail_formula() {
        let inp = TheoryBoundInputs { beta_override: None, ..worked_example() };
        let r = eta_bound(&inp).unwrap();
        assert_eq!(r.beta, false_positive_bound(3.0));
    }

    #[test]
    fn rejects_invalid_inputs() {
        let bad = |f: fn(&mut TheoryBoundInputs)| {
            let mut inp = worked_example();
            f(&mut inp);
            eta_bound(&inp).is_err()
        };
        assert!(bad(|i| i.alpha = 0.5));
        assert!(bad(|i| i.gamma = 0.0));
        assert!(bad(|i| i.kappa = 1.0));
        assert!(bad(|i| i.min_clean_norm = 6.0));
        assert!(bad(|i| i.beta_override = Some(1.5)));
        // α + β >= 1
        assert!(bad(|i| {
            i.alpha = 0.4;
            i.beta_override = Some(0.6);
        }));
    }
}
