//! The three objective families solved by the benchmark: the log-det
//! quadratic, the Karcher-mean problem, and the quartic log-det family that is
//! nonconvex yet satisfies a Polyak–Łojasiewicz inequality under the
//! affine-invariant metric.
//!
//! Each family exposes the value, the Euclidean (Frobenius-metric) gradient,
//! the Riemannian gradient, and known-optimum metadata. The first and third
//! families are functions of `s = ln det X` alone, which the geodesic
//! restriction below exploits: `ln det exp_X(tV) = s + t·tr(X⁻¹V)`.

use crate::error::{Error, Result};
use crate::manifold::{self, SpdPoint, TangentVector};
use crate::sym::SymMatrix;

/// Known optimum metadata attached to an objective.
#[derive(Clone, Debug, PartialEq)]
pub struct KnownOptimum {
    pub f_star: f64,
    pub minimizer: String,
}

/// One problem instance: a callable bundle of value and gradients.
#[derive(Clone, Debug)]
pub enum Objective {
    /// `f(X) = ln²(det X) − ln(det X)`; geodesically convex, minimum −1/4.
    LogDetQuadratic { dim: usize },
    /// `f(X) = ½ Σ_j d²(X, A_j)`, the Karcher-mean objective.
    KarcherMean { anchors: Vec<SpdPoint> },
    /// `f(X) = a·ln⁴(det X) − b·ln³(det X) − (b³/a²)·ln(det X)`; nonconvex,
    /// satisfies the PL inequality with `μ ≤ 27nb²/(28a)`.
    PlQuartic { dim: usize, a: f64, b: f64 },
}

impl Objective {
    pub fn log_det_quadratic(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dim must be ≥ 1".into()));
        }
        Ok(Self::LogDetQuadratic { dim })
    }

    pub fn karcher_mean(anchors: Vec<SpdPoint>) -> Result<Self> {
        let first = anchors
            .first()
            .ok_or_else(|| Error::InvalidInput("Karcher mean needs at least one anchor".into()))?;
        let dim = first.dim();
        if anchors.iter().any(|a| a.dim() != dim) {
            return Err(Error::InvalidInput(
                "Karcher anchors must share one dimension".into(),
            ));
        }
        Ok(Self::KarcherMean { anchors })
    }

    pub fn pl_quartic(dim: usize, a: f64, b: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dim must be ≥ 1".into()));
        }
        if !(a > 0.0) || !(b > 0.0) {
            return Err(Error::InvalidInput(format!(
                "PL quartic needs a > 0 and b > 0, got a={a}, b={b}"
            )));
        }
        Ok(Self::PlQuartic { dim, a, b })
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::LogDetQuadratic { dim } => *dim,
            Self::KarcherMean { anchors } => anchors[0].dim(),
            Self::PlQuartic { dim, .. } => *dim,
        }
    }

    /// Short machine-readable label, used as the `problem` column in traces.
    pub fn label(&self) -> String {
        match self {
            Self::LogDetQuadratic { dim } => format!("logdet-n{dim}"),
            Self::KarcherMean { anchors } => {
                format!("karcher-n{}-m{}", anchors[0].dim(), anchors.len())
            }
            Self::PlQuartic { dim, a, b } => format!("pl-n{dim}-a{a}-b{b}"),
        }
    }

    pub fn value(&self, x: &SpdPoint) -> Result<f64> {
        self.check_dim(x)?;
        match self {
            Self::LogDetQuadratic { .. } => {
                let s = x.ln_det();
                Ok(s * s - s)
            }
            Self::KarcherMean { anchors } => {
                let mut total = 0.0;
                for a in anchors {
                    let d = manifold::distance(x, a)?;
                    total += 0.5 * d * d;
                }
                Ok(total)
            }
            Self::PlQuartic { a, b, .. } => Ok(pl_poly(*a, *b).eval(x.ln_det())),
        }
    }

    /// Euclidean (Frobenius-metric) gradient `f'(X)`.
    pub fn euclidean_grad(&self, x: &SpdPoint) -> Result<SymMatrix> {
        self.check_dim(x)?;
        match self {
            Self::LogDetQuadratic { .. } => {
                Ok(x.inverse().scale(2.0 * x.ln_det() - 1.0))
            }
            Self::KarcherMean { .. } => {
                // X⁻¹ · grad f(X) · X⁻¹, from the Riemannian gradient.
                let g = self.riemannian_grad(x)?;
                Ok(g.value().congruence(x.inverse().as_matrix()))
            }
            Self::PlQuartic { a, b, .. } => {
                let c = pl_poly(*a, *b).derivative().eval(x.ln_det());
                Ok(x.inverse().scale(c))
            }
        }
    }

    /// Riemannian gradient `grad f(X) = X f'(X) X` in closed form.
    pub fn riemannian_grad(&self, x: &SpdPoint) -> Result<TangentVector> {
        self.check_dim(x)?;
        match self {
            Self::LogDetQuadratic { .. } => {
                let c = 2.0 * x.ln_det() - 1.0;
                Ok(TangentVector::new(x.matrix().scale(c)))
            }
            Self::KarcherMean { anchors } => {
                // grad d²(·, A)(X) = −2 log_X(A); the ½ in f cancels the 2.
                let mut sum = SymMatrix::zeros(x.dim());
                for a in anchors {
                    sum = &sum - manifold::log_map(x, a)?.value();
                }
                Ok(TangentVector::new(sum))
            }
            Self::PlQuartic { a, b, .. } => {
                let c = pl_poly(*a, *b).derivative().eval(x.ln_det());
                Ok(TangentVector::new(x.matrix().scale(c)))
            }
        }
    }

    /// `f*` and a description of the minimizer, when known in closed form.
    /// For the Karcher mean it is only known for a single anchor.
    pub fn known_optimum(&self) -> Option<KnownOptimum> {
        match self {
            Self::LogDetQuadratic { .. } => Some(KnownOptimum {
                f_star: -0.25,
                minimizer: "any X with ln det X = 1/2".to_string(),
            }),
            Self::KarcherMean { anchors } if anchors.len() == 1 => Some(KnownOptimum {
                f_star: 0.0,
                minimizer: "the single anchor".to_string(),
            }),
            Self::KarcherMean { .. } => None,
            Self::PlQuartic { a, b, .. } => Some(KnownOptimum {
                f_star: -b.powi(4) / a.powi(3),
                minimizer: format!("any X with det X = e^(b/a), b/a = {}", b / a),
            }),
        }
    }

    fn check_dim(&self, x: &SpdPoint) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::InvalidInput(format!(
                "point dim {} does not match objective dim {}",
                x.dim(),
                self.dim()
            )));
        }
        Ok(())
    }
}

/// PL certificate constants for the quartic family:
/// `μ ≤ 27nb²/(28a)` and `f* = −b⁴/a³`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlCertificate {
    pub mu_bound: f64,
    pub f_star: f64,
}

pub fn pl_certificate(n: usize, a: f64, b: f64) -> Result<PlCertificate> {
    if n == 0 || !(a > 0.0) || !(b > 0.0) {
        return Err(Error::InvalidInput(format!(
            "need n ≥ 1, a > 0, b > 0; got n={n}, a={a}, b={b}"
        )));
    }
    Ok(PlCertificate {
        mu_bound: 27.0 * n as f64 * b * b / (28.0 * a),
        f_star: -b.powi(4) / a.powi(3),
    })
}

/// Dense univariate polynomial, coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Polynomial { coeffs }
    }
}

/// `g(s) = a s⁴ − b s³ − (b³/a²) s`, the 1-d profile of the quartic family.
fn pl_poly(a: f64, b: f64) -> Polynomial {
    Polynomial::new(vec![0.0, -b.powi(3) / (a * a), 0.0, -b, a])
}

/// `g(s) = s² − s`, the 1-d profile of the log-det quadratic.
fn logdet_poly() -> Polynomial {
    Polynomial::new(vec![0.0, -1.0, 1.0])
}

/// Restriction of a log-det objective to the geodesic `t ↦ exp_X(tV)`:
/// `f(exp_X(tV)) = g(s0 + t·u)` exactly, with `s0 = ln det X` and
/// `u = tr(X⁻¹V)`.
#[derive(Clone, Debug)]
pub struct GeodesicRestriction {
    pub s0: f64,
    pub rate: f64,
    pub poly: Polynomial,
}

impl GeodesicRestriction {
    pub fn value_at(&self, t: f64) -> f64 {
        self.poly.eval(self.s0 + t * self.rate)
    }

    /// `d²/dt² f(exp_X(tV))` at `t = 0`, i.e. `g''(s0)·u²`.
    pub fn second_derivative_at_zero(&self) -> f64 {
        self.poly.derivative().derivative().eval(self.s0) * self.rate * self.rate
    }
}

/// Build the geodesic restriction for the two families that are functions of
/// `ln det X`. The Karcher mean is not, and is rejected.
pub fn geodesic_restriction(
    obj: &Objective,
    x: &SpdPoint,
    v: &TangentVector,
) -> Result<GeodesicRestriction> {
    if v.dim() != x.dim() {
        return Err(Error::InvalidInput("tangent dim mismatch".into()));
    }
    let poly = match obj {
        Objective::LogDetQuadratic { .. } => logdet_poly(),
        Objective::PlQuartic { a, b, .. } => pl_poly(*a, *b),
        Objective::KarcherMean { .. } => {
            return Err(Error::InvalidInput(
                "the Karcher objective is not a function of ln det X".into(),
            ))
        }
    };
    let rate = x.inverse().as_matrix().dot(v.value().as_matrix());
    Ok(GeodesicRestriction {
        s0: x.ln_det(),
        rate,
        poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::{exp_map, inner, norm};
    use approx::assert_relative_eq;
    use nalgebra::DMatrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_spd(n: usize, lo: f64, hi: f64, rng: &mut ChaCha8Rng) -> SpdPoint {
        let spectrum: Vec<f64> = (0..n).map(|_| rng.random_range(lo..hi)).collect();
        let raw = DMatrix::from_fn(n, n, |_, _| rng.random_range(0.0..1.0));
        let q = raw.qr().q();
        SpdPoint::new(SymMatrix::from_diagonal(&spectrum).congruence(&q)).unwrap()
    }

    fn random_tangent(n: usize, rng: &mut ChaCha8Rng) -> TangentVector {
        let raw = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        TangentVector::new(SymMatrix::new(raw).unwrap())
    }

    /// Rescale an SPD point so that `ln det` hits a target exactly-ish.
    fn with_ln_det(x: &SpdPoint, target: f64) -> SpdPoint {
        let shift = (target - x.ln_det()) / x.dim() as f64;
        SpdPoint::new(x.matrix().scale(shift.exp())).unwrap()
    }

    #[test]
    fn logdet_value_examples() {
        let obj = Objective::log_det_quadratic(3).unwrap();
        assert_eq!(obj.value(&SpdPoint::identity(3)).unwrap(), 0.0);

        let obj1 = Objective::log_det_quadratic(1).unwrap();
        let xe = SpdPoint::from_diagonal(&[std::f64::consts::E]).unwrap();
        assert_relative_eq!(obj1.value(&xe).unwrap(), 0.0, epsilon = 1e-14);

        // Vertex of s² − s at s = 1/2.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = with_ln_det(&random_spd(4, 0.1, 20.0, &mut rng), 0.5);
        let obj = Objective::log_det_quadratic(4).unwrap();
        assert_relative_eq!(obj.value(&x).unwrap(), -0.25, epsilon = 1e-12);
    }

    #[test]
    fn logdet_rgrad_examples() {
        let obj = Objective::log_det_quadratic(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x = with_ln_det(&random_spd(3, 0.1, 20.0, &mut rng), 0.5);
        assert!(norm(&x, &obj.riemannian_grad(&x).unwrap()).unwrap() <= 1e-10);

        let i = SpdPoint::identity(3);
        let g = obj.riemannian_grad(&i).unwrap();
        assert!((g.value() - &SymMatrix::identity(3).scale(-1.0)).frob_norm() <= 1e-14);
        assert_relative_eq!(norm(&i, &g).unwrap(), 3.0f64.sqrt(), max_relative = 1e-14);

        let obj1 = Objective::log_det_quadratic(1).unwrap();
        let x1 = SpdPoint::from_diagonal(&[1.0]).unwrap();
        assert_relative_eq!(
            obj1.riemannian_grad(&x1).unwrap().value().entry(0, 0),
            -1.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn karcher_value_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let a1 = random_spd(3, 0.1, 20.0, &mut rng);
        let obj = Objective::karcher_mean(vec![a1.clone()]).unwrap();
        assert!(obj.value(&a1).unwrap() <= 1e-20);

        let anchor = SpdPoint::from_diagonal(&[std::f64::consts::E, 1.0]).unwrap();
        let obj = Objective::karcher_mean(vec![anchor]).unwrap();
        assert_relative_eq!(
            obj.value(&SpdPoint::identity(2)).unwrap(),
            0.5,
            max_relative = 1e-14
        );

        let e = std::f64::consts::E;
        let obj = Objective::karcher_mean(vec![
            SpdPoint::from_diagonal(&[e]).unwrap(),
            SpdPoint::from_diagonal(&[1.0 / e]).unwrap(),
        ])
        .unwrap();
        assert_relative_eq!(
            obj.value(&SpdPoint::from_diagonal(&[1.0]).unwrap()).unwrap(),
            1.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn karcher_rgrad_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a1 = random_spd(3, 0.1, 20.0, &mut rng);
        let obj = Objective::karcher_mean(vec![a1.clone()]).unwrap();
        assert!(norm(&a1, &obj.riemannian_grad(&a1).unwrap()).unwrap() <= 1e-9);

        // At the identity with diagonal anchors, the gradient is −Σ ln A_j.
        let d1 = [2.0, 5.0];
        let d2 = [0.5, 3.0];
        let obj = Objective::karcher_mean(vec![
            SpdPoint::from_diagonal(&d1).unwrap(),
            SpdPoint::from_diagonal(&d2).unwrap(),
        ])
        .unwrap();
        let g = obj.riemannian_grad(&SpdPoint::identity(2)).unwrap();
        let expected =
            SymMatrix::from_diagonal(&[-(d1[0].ln() + d2[0].ln()), -(d1[1].ln() + d2[1].ln())]);
        assert!((g.value() - &expected).frob_norm() <= 1e-13);
    }

    #[test]
    fn pl_value_examples() {
        let (a, b) = (2.0, 3.0);
        let obj = Objective::pl_quartic(3, a, b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let x = with_ln_det(&random_spd(3, 0.1, 20.0, &mut rng), b / a);
        assert_relative_eq!(
            obj.value(&x).unwrap(),
            -b.powi(4) / a.powi(3),
            max_relative = 1e-10
        );

        let x0 = with_ln_det(&random_spd(3, 0.1, 20.0, &mut rng), 0.0);
        assert!(obj.value(&x0).unwrap().abs() <= 1e-10);

        let obj1 = Objective::pl_quartic(1, 1.0, 1.0).unwrap();
        let xe = SpdPoint::from_diagonal(&[std::f64::consts::E]).unwrap();
        assert_relative_eq!(obj1.value(&xe).unwrap(), -1.0, max_relative = 1e-12);
    }

    #[test]
    fn pl_rgrad_examples() {
        let (a, b) = (1.0, 2.0);
        let obj = Objective::pl_quartic(4, a, b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let x = with_ln_det(&random_spd(4, 0.1, 20.0, &mut rng), b / a);
        assert!(norm(&x, &obj.riemannian_grad(&x).unwrap()).unwrap() <= 1e-8);

        let x0 = with_ln_det(&random_spd(4, 0.1, 20.0, &mut rng), 0.0);
        let g = obj.riemannian_grad(&x0).unwrap();
        let c = b.powi(3) / (a * a);
        let expected = x0.matrix().scale(-c);
        assert!((g.value() - &expected).frob_norm() <= 1e-9 * expected.frob_norm());
        assert_relative_eq!(norm(&x0, &g).unwrap(), c * 2.0, max_relative = 1e-9);
    }

    #[test]
    fn pl_certificate_examples() {
        let c = pl_certificate(1, 1.0, 1.0).unwrap();
        assert_relative_eq!(c.mu_bound, 27.0 / 28.0, max_relative = 1e-15);
        assert_eq!(c.f_star, -1.0);

        let c = pl_certificate(10, 1.0, 1.0).unwrap();
        assert_relative_eq!(c.mu_bound, 270.0 / 28.0, max_relative = 1e-15);

        assert!(
            pl_certificate(5, 1.0, 1e-8).unwrap().mu_bound
                < pl_certificate(5, 1.0, 1e-4).unwrap().mu_bound
        );
    }

    #[test]
    fn geodesic_restriction_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let x = random_spd(3, 0.5, 5.0, &mut rng);
        let v = random_tangent(3, &mut rng);

        // Problem 1 restricts to s² − s: curvature 2 everywhere.
        let obj = Objective::log_det_quadratic(3).unwrap();
        let r = geodesic_restriction(&obj, &x, &v).unwrap();
        assert_eq!(r.poly.derivative().derivative().coeffs(), &[2.0]);

        // Quartic family at s0 = b/(4a): g''(s0) = −3b²/(4a) < 0.
        let (a, b) = (1.5, 2.0);
        let obj = Objective::pl_quartic(3, a, b).unwrap();
        let xw = with_ln_det(&x, b / (4.0 * a));
        let r = geodesic_restriction(&obj, &xw, &v).unwrap();
        let gpp = r.poly.derivative().derivative().eval(r.s0);
        assert_relative_eq!(gpp, -3.0 * b * b / (4.0 * a), max_relative = 1e-9);

        // Trace-orthogonal direction: f is constant along the geodesic.
        let mut w = random_tangent(3, &mut rng);
        let u = x.inverse().as_matrix().dot(w.value().as_matrix());
        let xx = x.inverse().as_matrix().dot(x.matrix().as_matrix());
        w = TangentVector::new(w.value() - &x.matrix().scale(u / xx));
        let r = geodesic_restriction(&obj, &x, &w).unwrap();
        assert!(r.rate.abs() <= 1e-12 * (1.0 + w.value().frob_norm()));
        let f0 = obj.value(&x).unwrap();
        for t in [0.3, 0.9] {
            let p = exp_map(&x, &w.scale(t)).unwrap();
            let ft = obj.value(&p).unwrap();
            assert!((ft - f0).abs() <= 1e-7 * (1.0 + f0.abs()));
        }

        let karcher = Objective::karcher_mean(vec![x.clone()]).unwrap();
        assert!(geodesic_restriction(&karcher, &x, &v).is_err());
    }

    #[test]
    fn restriction_matches_direct_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..6 {
            let x = random_spd(4, 0.2, 8.0, &mut rng);
            let v = random_tangent(4, &mut rng);
            let obj = Objective::pl_quartic(4, 1.0, 1.0).unwrap();
            let r = geodesic_restriction(&obj, &x, &v).unwrap();
            for t in [0.0, 0.2, 0.7, 1.3] {
                let p = exp_map(&x, &v.scale(t)).unwrap();
                let direct = obj.value(&p).unwrap();
                assert_relative_eq!(r.value_at(t), direct, max_relative = 1e-9, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn gradients_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        let anchors: Vec<SpdPoint> = (0..3).map(|_| random_spd(4, 0.1, 20.0, &mut rng)).collect();
        let objectives = vec![
            Objective::log_det_quadratic(4).unwrap(),
            Objective::karcher_mean(anchors).unwrap(),
            Objective::pl_quartic(4, 1.0, 1.0).unwrap(),
        ];
        for obj in &objectives {
            for _ in 0..6 {
                let x = random_spd(4, 0.3, 10.0, &mut rng);
                let mut v = random_tangent(4, &mut rng);
                let vn = norm(&x, &v).unwrap();
                v = v.scale(1.0 / vn);
                let g = obj.riemannian_grad(&x).unwrap();
                let ip = inner(&x, &g, &v).unwrap();
                if ip.abs() < 1e-6 * norm(&x, &g).unwrap() {
                    continue;
                }
                let t = 1e-6;
                let fp = obj.value(&exp_map(&x, &v.scale(t)).unwrap()).unwrap();
                let fm = obj.value(&exp_map(&x, &v.scale(-t)).unwrap()).unwrap();
                let fd = (fp - fm) / (2.0 * t);
                assert_relative_eq!(fd, ip, max_relative = 1e-4);
            }
        }
    }

    #[test]
    fn closed_form_rgrad_matches_conversion_of_egrad() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let anchors: Vec<SpdPoint> = (0..2).map(|_| random_spd(3, 0.1, 20.0, &mut rng)).collect();
        let objectives = vec![
            Objective::log_det_quadratic(3).unwrap(),
            Objective::karcher_mean(anchors).unwrap(),
            Objective::pl_quartic(3, 2.0, 1.0).unwrap(),
        ];
        for obj in &objectives {
            let x = random_spd(3, 0.2, 10.0, &mut rng);
            let direct = obj.riemannian_grad(&x).unwrap();
            let converted =
                crate::manifold::riemannian_gradient(&x, &obj.euclidean_grad(&x).unwrap()).unwrap();
            let rel = (direct.value() - converted.value()).frob_norm()
                / (1.0 + direct.value().frob_norm());
            assert!(rel <= 1e-9, "conversion mismatch {rel:e} on {}", obj.label());
        }
    }

    #[test]
    fn pl_inequality_holds_on_samples() {
        let (n, a, b) = (10usize, 1.0, 1.0);
        let cert = pl_certificate(n, a, b).unwrap();
        let obj = Objective::pl_quartic(n, a, b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2025);
        let mut checked = 0;
        while checked < 1000 {
            let x = random_spd(n, 0.05, 20.0, &mut rng);
            let s = x.ln_det();
            if ((s - b / a).exp() - 1.0).abs() * (b / a).exp() <= 1e-6 {
                continue; // det within 1e-6 of e^{b/a}
            }
            let g = obj.riemannian_grad(&x).unwrap();
            let gn = norm(&x, &g).unwrap();
            let gap = obj.value(&x).unwrap() - cert.f_star;
            let ratio = gn * gn / gap;
            assert!(
                ratio >= cert.mu_bound - 1e-9,
                "PL ratio {ratio} below bound {} at s={s}",
                cert.mu_bound
            );
            checked += 1;
        }
    }

    #[test]
    fn euclidean_pl_ratio_decays_along_scaled_identity() {
        let (n, a, b) = (10usize, 1.0, 1.0);
        let obj = Objective::pl_quartic(n, a, b).unwrap();
        let f_star = obj.known_optimum().unwrap().f_star;
        let euclidean_ratio = |t: f64| {
            let x = SpdPoint::from_diagonal(&vec![t; n]).unwrap();
            let e = obj.euclidean_grad(&x).unwrap();
            let num = e.frob_norm().powi(2);
            num / (obj.value(&x).unwrap() - f_star)
        };
        let r3 = euclidean_ratio(1e3);
        let r6 = euclidean_ratio(1e6);
        assert!(
            r6 < r3,
            "Euclidean PL ratio should decay toward 0: r(1e3)={r3:e}, r(1e6)={r6:e}"
        );
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(Objective::pl_quartic(3, 0.0, 1.0).is_err());
        assert!(Objective::pl_quartic(3, 1.0, -1.0).is_err());
        assert!(Objective::karcher_mean(vec![]).is_err());
        assert!(Objective::karcher_mean(vec![
            SpdPoint::identity(2),
            SpdPoint::identity(3)
        ])
        .is_err());
        assert!(pl_certificate(0, 1.0, 1.0).is_err());
    }
}
