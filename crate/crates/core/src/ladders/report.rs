//! Verify-then-derive report for every ladder operator.

use num_traits::One;

use super::angular::{j_printed_coefficient, recur_j_printed, score_pair, AngularLadders, Direction};
use super::intertwiners::intertwiner_report;
use super::jacobi::{build_jacobi_ladder, derived_coefficient, Step};
use super::radial::{
    k_action, k_coefficient, k_stepwise_product, printed_k_plus_on_ground, recur_k_printed, Branch,
    RadialImage,
};
use crate::error::Result;
use crate::params::Params;
use crate::poly_core::rational::int;
use crate::poly_core::Rational;
use crate::report::{Report, Verdict};

fn jacobi_lines(report: &mut Report, nmax: usize, params: &Params) -> Result<()> {
    let a = params.alpha() + Rational::one();
    let b = params.beta() - Rational::one();
    for (step, name) in [(Step::Lower, "lowering"), (Step::Raise, "raising")] {
        let mut printed = Vec::new();
        let mut ok = true;
        for j in 1..=nmax {
            let v = build_jacobi_ladder(j, step, &a, &b)?;
            ok &= v.coefficient == derived_coefficient(j, step, &a, &b);
            printed.push(v.printed_status);
        }
        report.push(
            Verdict::pass_if(ok),
            format!("Jacobi {name} operator maps basis to basis"),
            format!("j = 1..{nmax}, family ({a}, {b})"),
        );
        let verdict = if printed.iter().all(|v| *v == Verdict::Match) {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        report.push(verdict, format!("printed Jacobi {name} operator"), "exact application to P_j");
    }
    Ok(())
}

fn angular_lines(report: &mut Report, nmax: usize, params: &Params) -> Result<()> {
    let (alpha, beta) = (params.alpha(), params.beta());
    let ladders = AngularLadders::new(alpha, beta)?;
    let mut ok = true;
    for n in 1..=nmax {
        ok &= ladders.action(Direction::Plus, n, 1).is_ok();
        if n >= 2 {
            ok &= ladders.action(Direction::Minus, n, 1).is_ok();
        }
    }
    report.push(
        Verdict::pass_if(ok && ladders.action(Direction::Minus, 1, 1).is_err()),
        "J+/- map basis to basis",
        format!("n = 1..{nmax}; J- at n = 1 leaves the family"),
    );

    let q = params.q() as usize;
    let mut composed_ok = true;
    for n in 1..=nmax.saturating_sub(q) {
        composed_ok &= ladders.action(Direction::Plus, n, q)? == ladders.stepwise_product(Direction::Plus, n, q)?;
        let m = n + q;
        composed_ok &= ladders.action(Direction::Minus, m, q)? == ladders.stepwise_product(Direction::Minus, m, q)?;
    }
    report.push(
        Verdict::pass_if(composed_ok),
        format!("J^{q} coefficient equals product of single steps"),
        "",
    );

    for qq in [1, q] {
        let mut derived = Vec::new();
        let mut printed = Vec::new();
        for n in 1..=nmax.saturating_sub(qq) {
            let cp = ladders.action(Direction::Plus, n, qq)?;
            let cm = ladders.action(Direction::Minus, n + qq, qq)?;
            derived.push((
                ladders.to_closed_form_normalization(Direction::Plus, n, qq, &cp)?,
                ladders.to_closed_form_normalization(Direction::Minus, n + qq, qq, &cm)?,
            ));
            printed.push(if qq == 1 {
                (
                    j_printed_coefficient(Direction::Plus, n, alpha, beta),
                    j_printed_coefficient(Direction::Minus, n + 1, alpha, beta),
                )
            } else {
                (
                    recur_j_printed(Direction::Plus, n, qq, alpha, beta),
                    recur_j_printed(Direction::Minus, n + qq, qq, alpha, beta),
                )
            });
        }
        report.push(
            score_pair(&derived, &printed),
            format!("printed J+/- coefficient pattern, q = {qq}"),
            "scored by the basis-invariant product c+(n) c-(n+q)",
        );
        if q == 1 {
            break;
        }
    }
    Ok(())
}

fn radial_lines(report: &mut Report, mmax: usize, nmax: usize, params: &Params) -> Result<()> {
    let p = params.p() as usize;
    let mut ok = true;
    let mut composed_ok = true;
    let mut single_ok = true;
    let mut derived = Vec::new();
    let mut printed = Vec::new();
    for n in 1..=nmax {
        let ell = params.k() * params.a_n(n as i64);
        for m in 0..=mmax {
            for br in [Branch::Plus, Branch::Minus] {
                match k_action(br, m, &ell, 1)? {
                    RadialImage::Basis { coefficient, .. } => {
                        single_ok &= coefficient == k_coefficient(br, m, &ell);
                    }
                    RadialImage::Annihilated => ok &= br == Branch::Plus && m == 0,
                }
                if let RadialImage::Basis { coefficient, .. } = k_action(br, m, &ell, p)? {
                    composed_ok &= Some(coefficient) == k_stepwise_product(br, m, &ell, p);
                }
            }
            if m >= p {
                let up = ell.clone() + int(2 * p as i64);
                let c = |br, mm, l: &Rational| match k_action(br, mm, l, p) {
                    Ok(RadialImage::Basis { coefficient, .. }) => Ok(coefficient),
                    Ok(RadialImage::Annihilated) => Ok(int(0)),
                    Err(e) => Err(e),
                };
                derived.push((c(Branch::Plus, m, &ell)?, c(Branch::Minus, m - p, &up)?));
                printed.push((
                    recur_k_printed(Branch::Plus, m, &ell, p),
                    recur_k_printed(Branch::Minus, m - p, &up, p),
                ));
            }
        }
    }
    report.push(
        Verdict::pass_if(ok && single_ok),
        "K+/- map basis to basis",
        format!("m = 0..{mmax}, n = 1..{nmax}; coefficients -1 and -(m+1)(m+kA); K+ annihilates m = 0"),
    );
    report.push(
        Verdict::pass_if(composed_ok),
        format!("K^{p} coefficient equals product of single steps"),
        "",
    );
    report.push(
        score_pair(&derived, &printed),
        format!("printed K^p coefficient pattern, p = {p}"),
        "",
    );
    let ell = params.k() * params.a_n(1);
    let t = printed_k_plus_on_ground(&ell)?;
    report.push(
        if t.ladder_convention == int(0) { Verdict::Match } else { Verdict::Mismatch },
        "printed K+ on Y_0",
        format!(
            "maps Y_0^{ell} to ({}) Y_0 = -(1+kA) Y_0 at E = 2 omega (2m+kA+1); ({}) Y_0 at E = omega (2m+kA+1)",
            t.ladder_convention, t.spectrum_convention
        ),
    );
    Ok(())
}

/// All ladder checks for one parameter set, `n <= nmax`, `m <= mmax`.
pub fn ladder_report(params: &Params, nmax: usize, mmax: usize) -> Result<Report> {
    let mut report = Report::new();
    jacobi_lines(&mut report, nmax, params)?;
    report.extend(intertwiner_report(params.alpha(), params.beta())?);
    angular_lines(&mut report, nmax, params)?;
    radial_lines(&mut report, mmax, nmax, params)?;
    Ok(report)
}
