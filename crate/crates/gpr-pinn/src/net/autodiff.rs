//! Mixed-mode differentiation for the 2-input field networks.
//!
//! The forward pass propagates, per scalar quantity, the bundle
//! `(value, dE/dx, d2E/dx2, dE/dt, d2E/dt2)` through every layer — a
//! second-order forward-mode sweep for both input axes at once. Input
//! derivatives obtained this way are exact compositions of exact layer
//! rules, i.e. machine precision.
//!
//! The reverse pass backpropagates a five-component adjoint through the same
//! cached sweep, yielding d(loss)/d(parameter) for losses that mix the
//! network output with its first and second input derivatives. The adjoint
//! rules are the transposed Jacobians of the forward bundle maps:
//!
//! for y = f(u) applied to a bundle (u0, p1, p2, q1, q2),
//!   y = (f(u0), f'p1, f''p1^2 + f'p2, f'q1, f''q1^2 + f'q2)
//! so the transpose gives
//!   u0_adj  = f' y0_adj + f'' p1 y1_adj + (f''' p1^2 + f'' p2) y2_adj
//!           + f'' q1 y3_adj + (f''' q1^2 + f'' q2) y4_adj
//!   p1_adj  = f' y1_adj + 2 f'' p1 y2_adj
//!   p2_adj  = f' y2_adj                       (and symmetrically for q).

use crate::error::{Error, Result};
use crate::net::mlp::{
    MlpParams, OutputActivation, ParamGradient, EXP_INPUT_CLAMP,
};

/// Network output and its input derivatives at one (x, t) query point, in
/// the network's (scaled) input coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondOrderEval {
    pub value: f64,
    pub d_dx: f64,
    pub d_dt: f64,
    pub d2_dx2: f64,
    pub d2_dt2: f64,
}

impl SecondOrderEval {
    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
            && self.d_dx.is_finite()
            && self.d_dt.is_finite()
            && self.d2_dx2.is_finite()
            && self.d2_dt2.is_finite()
    }
}

/// Upstream loss derivatives with respect to each component of a
/// [`SecondOrderEval`].
#[derive(Debug, Clone, Copy, Default)]
pub struct SecondOrderAdjoint {
    pub value: f64,
    pub d_dx: f64,
    pub d_dt: f64,
    pub d2_dx2: f64,
    pub d2_dt2: f64,
}

/// One five-component bundle per neuron, struct-of-arrays layout.
#[derive(Debug, Clone, Default)]
struct BundleVec {
    v: Vec<f64>,
    dx: Vec<f64>,
    dxx: Vec<f64>,
    dt: Vec<f64>,
    dtt: Vec<f64>,
}

impl BundleVec {
    fn zeros(n: usize) -> Self {
        Self {
            v: vec![0.0; n],
            dx: vec![0.0; n],
            dxx: vec![0.0; n],
            dt: vec![0.0; n],
            dtt: vec![0.0; n],
        }
    }
}

/// Cached per-layer bundles from a second-order forward sweep.
#[derive(Debug, Clone)]
pub struct JetWorkspace {
    /// Pre-activation bundles per layer.
    z: Vec<BundleVec>,
    /// Post-activation bundles; a[0] is the input bundle.
    a: Vec<BundleVec>,
}

impl JetWorkspace {
    pub fn new(params: &MlpParams) -> Self {
        let sizes = params.layer_sizes();
        Self {
            z: sizes[1..].iter().map(|&n| BundleVec::zeros(n)).collect(),
            a: sizes.iter().map(|&n| BundleVec::zeros(n)).collect(),
        }
    }
}

impl MlpParams {
    /// Second-order forward sweep for a 2-input network at scaled inputs
    /// (x, t), filling `ws` with the caches the reverse sweep needs.
    pub fn forward_second_order_ws(&self, x: f64, t: f64, ws: &mut JetWorkspace) -> SecondOrderEval {
        debug_assert_eq!(self.in_dim(), 2);
        let n_layers = self.n_layers();

        let a0 = &mut ws.a[0];
        a0.v[0] = x;
        a0.v[1] = t;
        a0.dx[0] = 1.0;
        a0.dx[1] = 0.0;
        a0.dt[0] = 0.0;
        a0.dt[1] = 1.0;
        a0.dxx.fill(0.0);
        a0.dtt.fill(0.0);

        for l in 0..n_layers {
            let n_in = self.layer_sizes[l];
            let n_out = self.layer_sizes[l + 1];
            let w = &self.weights[l];
            let b = &self.biases[l];
            let last = l + 1 == n_layers;

            let (a_head, a_tail) = ws.a.split_at_mut(l + 1);
            let prev = &a_head[l];
            let out = &mut a_tail[0];
            let z = &mut ws.z[l];

            for j in 0..n_out {
                let row = &w[j * n_in..(j + 1) * n_in];
                let mut sv = b[j];
                let mut sdx = 0.0;
                let mut sdxx = 0.0;
                let mut sdt = 0.0;
                let mut sdtt = 0.0;
                for i in 0..n_in {
                    let wi = row[i];
                    sv += wi * prev.v[i];
                    sdx += wi * prev.dx[i];
                    sdxx += wi * prev.dxx[i];
                    sdt += wi * prev.dt[i];
                    sdtt += wi * prev.dtt[i];
                }
                z.v[j] = sv;
                z.dx[j] = sdx;
                z.dxx[j] = sdxx;
                z.dt[j] = sdt;
                z.dtt[j] = sdtt;

                if !last {
                    let tv = sv.tanh();
                    let t1 = 1.0 - tv * tv;
                    let t2 = -2.0 * tv * t1;
                    out.v[j] = tv;
                    out.dx[j] = t1 * sdx;
                    out.dxx[j] = t2 * sdx * sdx + t1 * sdxx;
                    out.dt[j] = t1 * sdt;
                    out.dtt[j] = t2 * sdt * sdt + t1 * sdtt;
                } else {
                    match self.output_activation {
                        OutputActivation::Identity => {
                            out.v[j] = sv;
                            out.dx[j] = sdx;
                            out.dxx[j] = sdxx;
                            out.dt[j] = sdt;
                            out.dtt[j] = sdtt;
                        }
                        OutputActivation::Exponential => {
                            if sv > EXP_INPUT_CLAMP {
                                crate::net::mlp::note_exp_clamp();
                                let e = EXP_INPUT_CLAMP.exp();
                                out.v[j] = e;
                                out.dx[j] = 0.0;
                                out.dxx[j] = 0.0;
                                out.dt[j] = 0.0;
                                out.dtt[j] = 0.0;
                            } else {
                                let e = sv.exp();
                                out.v[j] = e;
                                out.dx[j] = e * sdx;
                                out.dxx[j] = e * (sdx * sdx + sdxx);
                                out.dt[j] = e * sdt;
                                out.dtt[j] = e * (sdt * sdt + sdtt);
                            }
                        }
                    }
                }
            }
        }

        let y = &ws.a[n_layers];
        SecondOrderEval {
            value: y.v[0],
            d_dx: y.dx[0],
            d_dt: y.dt[0],
            d2_dx2: y.dxx[0],
            d2_dt2: y.dtt[0],
        }
    }

    /// Exact output and input derivatives of a 2-input network at (x, t).
    pub fn eval_second_order(&self, x: f64, t: f64) -> Result<SecondOrderEval> {
        if self.in_dim() != 2 {
            return Err(Error::Shape(format!(
                "second-order evaluation needs a 2-input network, this one takes {}",
                self.in_dim()
            )));
        }
        let mut ws = JetWorkspace::new(self);
        Ok(self.forward_second_order_ws(x, t, &mut ws))
    }

    /// Accumulates d(loss)/d(parameter) into `grad`, where the loss depends
    /// on the network through the five output components whose upstream
    /// derivatives are given in `adj`. Must follow a
    /// [`MlpParams::forward_second_order_ws`] call on the same workspace.
    pub fn backprop_second_order(
        &self,
        ws: &JetWorkspace,
        adj: &SecondOrderAdjoint,
        grad: &mut ParamGradient,
    ) {
        let n_layers = self.n_layers();

        // Adjoint bundle of the post-activation output currently processed.
        let mut av = vec![adj.value];
        let mut adx = vec![adj.d_dx];
        let mut adxx = vec![adj.d2_dx2];
        let mut adt = vec![adj.d_dt];
        let mut adtt = vec![adj.d2_dt2];

        for l in (0..n_layers).rev() {
            let n_in = self.layer_sizes[l];
            let n_out = self.layer_sizes[l + 1];
            let w = &self.weights[l];
            let z = &ws.z[l];
            let prev = &ws.a[l];
            let last = l + 1 == n_layers;

            // Pull the activation adjoints back to pre-activation adjoints.
            let (mut zv, mut zdx, mut zdxx, mut zdt, mut zdtt);
            match (last, self.output_activation) {
                (false, _) => {
                    zv = vec![0.0; n_out];
                    zdx = vec![0.0; n_out];
                    zdxx = vec![0.0; n_out];
                    zdt = vec![0.0; n_out];
                    zdtt = vec![0.0; n_out];
                    for j in 0..n_out {
                        let tv = ws.a[l + 1].v[j];
                        let t1 = 1.0 - tv * tv;
                        let t2 = -2.0 * tv * t1;
                        let t3 = t1 * (6.0 * tv * tv - 2.0);
                        let (p1, p2) = (z.dx[j], z.dxx[j]);
                        let (q1, q2) = (z.dt[j], z.dtt[j]);
                        zv[j] = t1 * av[j]
                            + t2 * p1 * adx[j]
                            + (t3 * p1 * p1 + t2 * p2) * adxx[j]
                            + t2 * q1 * adt[j]
                            + (t3 * q1 * q1 + t2 * q2) * adtt[j];
                        zdx[j] = t1 * adx[j] + 2.0 * t2 * p1 * adxx[j];
                        zdxx[j] = t1 * adxx[j];
                        zdt[j] = t1 * adt[j] + 2.0 * t2 * q1 * adtt[j];
                        zdtt[j] = t1 * adtt[j];
                    }
                }
                (true, OutputActivation::Identity) => {
                    zv = av;
                    zdx = adx;
                    zdxx = adxx;
                    zdt = adt;
                    zdtt = adtt;
                }
                (true, OutputActivation::Exponential) => {
                    zv = vec![0.0; n_out];
                    zdx = vec![0.0; n_out];
                    zdxx = vec![0.0; n_out];
                    zdt = vec![0.0; n_out];
                    zdtt = vec![0.0; n_out];
                    for j in 0..n_out {
                        if z.v[j] > EXP_INPUT_CLAMP {
                            continue; // clamped: output constant, no flow back
                        }
                        let e = ws.a[l + 1].v[j];
                        let (p1, p2) = (z.dx[j], z.dxx[j]);
                        let (q1, q2) = (z.dt[j], z.dtt[j]);
                        zv[j] = e
                            * (av[j]
                                + p1 * adx[j]
                                + (p1 * p1 + p2) * adxx[j]
                                + q1 * adt[j]
                                + (q1 * q1 + q2) * adtt[j]);
                        zdx[j] = e * (adx[j] + 2.0 * p1 * adxx[j]);
                        zdxx[j] = e * adxx[j];
                        zdt[j] = e * (adt[j] + 2.0 * q1 * adtt[j]);
                        zdtt[j] = e * adtt[j];
                    }
                }
            }

            // Affine part: parameter gradients and the previous layer's
            // activation adjoints. The weight multiplies all five bundle
            // components linearly.
            let gw = &mut grad.weights[l];
            let gb = &mut grad.biases[l];
            let mut pav = vec![0.0; n_in];
            let mut padx = vec![0.0; n_in];
            let mut padxx = vec![0.0; n_in];
            let mut padt = vec![0.0; n_in];
            let mut padtt = vec![0.0; n_in];
            for j in 0..n_out {
                gb[j] += zv[j];
                let row = &w[j * n_in..(j + 1) * n_in];
                let grow = &mut gw[j * n_in..(j + 1) * n_in];
                let (cv, cdx, cdxx, cdt, cdtt) = (zv[j], zdx[j], zdxx[j], zdt[j], zdtt[j]);
                for i in 0..n_in {
                    grow[i] += cv * prev.v[i]
                        + cdx * prev.dx[i]
                        + cdxx * prev.dxx[i]
                        + cdt * prev.dt[i]
                        + cdtt * prev.dtt[i];
                    let wi = row[i];
                    pav[i] += wi * cv;
                    padx[i] += wi * cdx;
                    padxx[i] += wi * cdxx;
                    padt[i] += wi * cdt;
                    padtt[i] += wi * cdtt;
                }
            }
            av = pav;
            adx = padx;
            adxx = padxx;
            adt = padt;
            adtt = padtt;
        }
    }
}

/// One squared-error contribution to a composite loss:
/// `weight * (coeff . components(x, t) - target)^2`, where `components` are
/// the five entries of [`SecondOrderEval`]. Data misfits use a pure value
/// coefficient; fixed-coefficient PDE residuals combine the second
/// derivatives.
#[derive(Debug, Clone, Copy)]
pub struct LossTerm {
    pub x: f64,
    pub t: f64,
    pub coeff_value: f64,
    pub coeff_dx: f64,
    pub coeff_dt: f64,
    pub coeff_dxx: f64,
    pub coeff_dtt: f64,
    pub target: f64,
    pub weight: f64,
}

impl LossTerm {
    /// Plain observation misfit: weight * (E(x, t) - observed)^2.
    pub fn observation(x: f64, t: f64, observed: f64, weight: f64) -> Self {
        Self {
            x,
            t,
            coeff_value: 1.0,
            coeff_dx: 0.0,
            coeff_dt: 0.0,
            coeff_dxx: 0.0,
            coeff_dtt: 0.0,
            target: observed,
            weight,
        }
    }

    /// Wave-equation residual with a fixed coefficient on the spatial term:
    /// weight * (d2E/dt2 - kappa d2E/dx2)^2.
    pub fn fixed_residual(x: f64, t: f64, kappa: f64, weight: f64) -> Self {
        Self {
            x,
            t,
            coeff_value: 0.0,
            coeff_dx: 0.0,
            coeff_dt: 0.0,
            coeff_dxx: -kappa,
            coeff_dtt: 1.0,
            target: 0.0,
            weight,
        }
    }
}

/// Loss value and full parameter gradient for a sum of [`LossTerm`]s over a
/// 2-input network. Gradients are exact for losses containing second input
/// derivatives (reverse over the cached second-order forward sweep).
pub fn loss_gradient(params: &MlpParams, terms: &[LossTerm]) -> Result<(f64, ParamGradient)> {
    if params.in_dim() != 2 {
        return Err(Error::Shape(
            "loss_gradient operates on 2-input networks".into(),
        ));
    }
    let mut ws = JetWorkspace::new(params);
    let mut grad = ParamGradient::zeros_like(params);
    let mut loss = 0.0;
    for term in terms {
        let eval = params.forward_second_order_ws(term.x, term.t, &mut ws);
        let combined = term.coeff_value * eval.value
            + term.coeff_dx * eval.d_dx
            + term.coeff_dt * eval.d_dt
            + term.coeff_dxx * eval.d2_dx2
            + term.coeff_dtt * eval.d2_dt2;
        let resid = combined - term.target;
        loss += term.weight * resid * resid;
        let g = 2.0 * term.weight * resid;
        let adj = SecondOrderAdjoint {
            value: g * term.coeff_value,
            d_dx: g * term.coeff_dx,
            d_dt: g * term.coeff_dt,
            d2_dx2: g * term.coeff_dxx,
            d2_dt2: g * term.coeff_dtt,
        };
        params.backprop_second_order(&ws, &adj, &mut grad);
    }
    if !loss.is_finite() {
        return Err(Error::Divergence(format!("non-finite loss ({loss})")));
    }
    Ok((loss, grad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::jet::Jet2;

    /// f(x, t) = tanh(alpha x + beta t) as a [2, 1, 1] network.
    fn one_neuron(alpha: f64, beta: f64) -> MlpParams {
        let mut p = MlpParams::init(0, &[2, 1, 1], OutputActivation::Identity).unwrap();
        p.weights_mut(0).copy_from_slice(&[alpha, beta]);
        p.biases_mut(0)[0] = 0.0;
        p.weights_mut(1)[0] = 1.0;
        p.biases_mut(1)[0] = 0.0;
        p
    }

    #[test]
    fn one_neuron_matches_closed_form() {
        let (alpha, beta) = (1.0, -0.6);
        let p = one_neuron(alpha, beta);
        for &(x, t) in &[(0.0, 0.0), (0.3, 0.8), (-1.2, 0.4)] {
            let e = p.eval_second_order(x, t).unwrap();
            let u = alpha * x + beta * t;
            let tv = u.tanh();
            let t1 = 1.0 - tv * tv;
            let t2 = -2.0 * tv * t1;
            assert!((e.value - tv).abs() < 1e-12);
            assert!((e.d_dx - alpha * t1).abs() < 1e-12);
            assert!((e.d_dt - beta * t1).abs() < 1e-12);
            assert!((e.d2_dx2 - alpha * alpha * t2).abs() < 1e-12);
            assert!((e.d2_dt2 - beta * beta * t2).abs() < 1e-12);
        }
        // At the origin tanh'' vanishes.
        let e = one_neuron(1.0, 0.0).eval_second_order(0.0, 0.0).unwrap();
        assert_eq!(e.value, 0.0);
        assert!((e.d_dx - 1.0).abs() < 1e-15);
        assert!(e.d2_dx2.abs() < 1e-15);
    }

    #[test]
    fn network_ignoring_t_has_zero_t_derivatives() {
        let mut p = MlpParams::init(5, &[2, 8, 1], OutputActivation::Identity).unwrap();
        let n_in = 2;
        for j in 0..8 {
            p.weights_mut(0)[j * n_in + 1] = 0.0;
        }
        let e = p.eval_second_order(0.7, 123.4).unwrap();
        assert_eq!(e.d_dt, 0.0);
        assert_eq!(e.d2_dt2, 0.0);
    }

    #[test]
    fn second_derivatives_match_finite_differences() {
        for &act in &[OutputActivation::Identity, OutputActivation::Exponential] {
            let p = MlpParams::init(42, &[2, 6, 6, 1], act).unwrap();
            let (x, t) = (0.35, -0.8);
            let e = p.eval_second_order(x, t).unwrap();
            let h = 1e-3;
            let f = |x: f64, t: f64| p.forward(&[x, t]).unwrap();
            let dxx = (f(x + h, t) - 2.0 * f(x, t) + f(x - h, t)) / (h * h);
            let dtt = (f(x, t + h) - 2.0 * f(x, t) + f(x, t - h)) / (h * h);
            assert!(
                (e.d2_dx2 - dxx).abs() / dxx.abs().max(1e-8) < 1e-4,
                "{act:?}: dxx {dxx:.6e} vs {:.6e}",
                e.d2_dx2
            );
            assert!(
                (e.d2_dt2 - dtt).abs() / dtt.abs().max(1e-8) < 1e-4,
                "{act:?}: dtt {dtt:.6e} vs {:.6e}",
                e.d2_dt2
            );
        }
    }

    #[test]
    fn bundle_sweep_agrees_with_scalar_jets() {
        // Propagate Jet2 values through the same network by hand, one axis
        // at a time, and compare against the fused bundle sweep.
        let p = MlpParams::init(9, &[2, 5, 5, 1], OutputActivation::Identity).unwrap();
        let (x, t) = (0.42, -1.1);
        let eval = p.eval_second_order(x, t).unwrap();

        let jet_pass = |seed_x: bool| -> Jet2 {
            let mut acts = vec![
                if seed_x { Jet2::var(x) } else { Jet2::constant(x) },
                if seed_x { Jet2::constant(t) } else { Jet2::var(t) },
            ];
            for l in 0..p.n_layers() {
                let n_in = p.layer_sizes()[l];
                let n_out = p.layer_sizes()[l + 1];
                let mut next = Vec::with_capacity(n_out);
                for j in 0..n_out {
                    let mut acc = Jet2::constant(p.biases(l)[j]);
                    for i in 0..n_in {
                        acc = acc + acts[i].scale(p.weights(l)[j * n_in + i]);
                    }
                    next.push(if l + 1 < p.n_layers() { acc.tanh() } else { acc });
                }
                acts = next;
            }
            acts[0]
        };

        let jx = jet_pass(true);
        let jt = jet_pass(false);
        assert!((eval.value - jx.v).abs() < 1e-14);
        assert!((eval.d_dx - jx.d).abs() < 1e-14);
        assert!((eval.d2_dx2 - jx.dd).abs() < 1e-14);
        assert!((eval.d_dt - jt.d).abs() < 1e-14);
        assert!((eval.d2_dt2 - jt.dd).abs() < 1e-14);
    }

    fn finite_difference_check(params: &MlpParams, terms: &[LossTerm], step: f64, tol: f64) {
        let (_, grad) = loss_gradient(params, terms).unwrap();
        let mut q = params.clone();
        for l in 0..q.n_layers() {
            for i in 0..q.weights(l).len() {
                let orig = q.weights(l)[i];
                q.weights_mut(l)[i] = orig + step;
                let up = loss_gradient(&q, terms).unwrap().0;
                q.weights_mut(l)[i] = orig - step;
                let dn = loss_gradient(&q, terms).unwrap().0;
                q.weights_mut(l)[i] = orig;
                let fd = (up - dn) / (2.0 * step);
                let an = grad.weights[l][i];
                assert!(
                    (fd - an).abs() <= tol * fd.abs().max(an.abs()).max(1e-8),
                    "layer {l} weight {i}: fd {fd:.8e} vs analytic {an:.8e}"
                );
            }
            for j in 0..q.biases(l).len() {
                let orig = q.biases(l)[j];
                q.biases_mut(l)[j] = orig + step;
                let up = loss_gradient(&q, terms).unwrap().0;
                q.biases_mut(l)[j] = orig - step;
                let dn = loss_gradient(&q, terms).unwrap().0;
                q.biases_mut(l)[j] = orig;
                let fd = (up - dn) / (2.0 * step);
                let an = grad.biases[l][j];
                assert!(
                    (fd - an).abs() <= tol * fd.abs().max(an.abs()).max(1e-8),
                    "layer {l} bias {j}: fd {fd:.8e} vs analytic {an:.8e}"
                );
            }
        }
    }

    fn tiny_pinn_terms() -> Vec<LossTerm> {
        let mut terms = Vec::new();
        let obs = [
            (0.1, 0.2, 0.5),
            (0.4, 1.0, -0.3),
            (0.8, 2.0, 0.1),
            (1.2, 0.7, 0.9),
            (1.6, 1.5, -0.6),
        ];
        for &(x, t, e) in &obs {
            terms.push(LossTerm::observation(x, t, e, 1.0 / obs.len() as f64));
        }
        let colloc = [(0.2, 0.4), (0.5, 1.3), (0.9, 0.1), (1.3, 1.9), (1.7, 0.8)];
        for &(x, t) in &colloc {
            terms.push(LossTerm::fixed_residual(x, t, 0.03, 1.0 / colloc.len() as f64));
        }
        terms
    }

    #[test]
    fn loss_gradient_constant_loss_is_zero() {
        let p = MlpParams::init(2, &[2, 4, 1], OutputActivation::Identity).unwrap();
        let term = LossTerm {
            x: 0.3,
            t: 0.7,
            coeff_value: 0.0,
            coeff_dx: 0.0,
            coeff_dt: 0.0,
            coeff_dxx: 0.0,
            coeff_dtt: 0.0,
            target: 2.0,
            weight: 1.5,
        };
        let (loss, grad) = loss_gradient(&p, &[term]).unwrap();
        assert_eq!(loss, 1.5 * 4.0);
        assert!(grad.iter().all(|&g| g == 0.0));
    }

    #[test]
    fn loss_gradient_is_linear_in_the_loss() {
        let p = MlpParams::init(3, &[2, 4, 1], OutputActivation::Identity).unwrap();
        let terms = tiny_pinn_terms();
        let doubled: Vec<LossTerm> = terms
            .iter()
            .map(|t| LossTerm {
                weight: 2.0 * t.weight,
                ..*t
            })
            .collect();
        let (l1, g1) = loss_gradient(&p, &terms).unwrap();
        let (l2, g2) = loss_gradient(&p, &doubled).unwrap();
        assert!((l2 - 2.0 * l1).abs() < 1e-12 * l1.abs().max(1.0));
        for (a, b) in g1.iter().zip(g2.iter()) {
            assert!((b - 2.0 * a).abs() < 1e-12 * a.abs().max(1e-12));
        }
    }

    #[test]
    fn full_loss_gradient_matches_finite_differences() {
        for &act in &[OutputActivation::Identity, OutputActivation::Exponential] {
            let p = MlpParams::init(4, &[2, 4, 1], act).unwrap();
            finite_difference_check(&p, &tiny_pinn_terms(), 1e-5, 1e-4);
        }
    }
}
