//! Define-by-run reverse-mode differentiation over [`Matrix`] values.
//!
//! A [`Tape`] records every executed operation in program order. Calling
//! [`Tape::backward`] on a scalar output replays the record in exact reverse
//! order, accumulating gradients additively into every node that leads to a
//! `requires_grad` leaf. Nodes unreachable from the loss keep no gradient.
//!
//! The tape is rebuilt for every training step; nothing is cached across
//! steps. All arithmetic is sequential `f64`, so identical inputs produce
//! bitwise-identical outputs and gradients.

use crate::autodiff::matrix::Matrix;
use crate::error::{Error, Result};

/// Handle to a tensor recorded on a tape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Var(usize);

/// Supported elementwise nonlinearities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activation {
    Relu,
    Tanh,
    Sigmoid,
}

/// Backward rule of a recorded operation, together with whatever forward
/// byproducts the rule needs (softmax probabilities, row norms, offsets).
#[derive(Debug, Clone)]
enum Step {
    Leaf,
    Matmul { a: Var, b: Var },
    Transpose { x: Var },
    Add { a: Var, b: Var },
    Mul { a: Var, b: Var },
    AddBias { x: Var, bias: Var },
    Activate { x: Var, kind: Activation },
    SoftmaxRows { x: Var },
    MeanRows { x: Var },
    ConcatRows { parts: Vec<Var> },
    L2NormalizeRows { x: Var, norms: Vec<f64> },
    ScalarScale { x: Var, factor: f64 },
    CrossEntropy { logits: Var, probs: Vec<f64>, label: usize },
    Mse { a: Var, b: Var },
    SumAll { x: Var },
}

pub struct Tape {
    values: Vec<Matrix>,
    steps: Vec<Step>,
    requires: Vec<bool>,
    grads: Vec<Option<Matrix>>,
}

/// `out += coef * src`; the one inner loop behind every matmul-like kernel.
#[inline]
fn axpy(out: &mut [f64], coef: f64, src: &[f64]) {
    for (o, s) in out.iter_mut().zip(src) {
        *o += coef * s;
    }
}

/// `out(m,n) += a(m,k) * b(k,n)`, all row-major.
fn gemm_acc(out: &mut [f64], a: &[f64], b: &[f64], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(out.len(), m * n);
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        let orow = &mut out[i * n..(i + 1) * n];
        for (p, &aip) in arow.iter().enumerate() {
            axpy(orow, aip, &b[p * n..(p + 1) * n]);
        }
    }
}

/// `out(m,k) += g(m,n) * b(k,n)^T` — the dL/dA rule of matmul.
fn gemm_nt_acc(out: &mut [f64], g: &[f64], b: &[f64], m: usize, k: usize, n: usize) {
    for i in 0..m {
        let grow = &g[i * n..(i + 1) * n];
        let orow = &mut out[i * k..(i + 1) * k];
        for (j, &gij) in grow.iter().enumerate() {
            // orow[p] += gij * b[p, j] has stride k; flip loops instead:
            // accumulate column j of b^T as a strided walk is slow, so do
            // the rank-1 update against b rows.
            let _ = j;
            let _ = gij;
            break;
        }
        // dA[i, :] += sum_j g[i, j] * b[j_row over k]? b is k x n, so
        // dA[i, p] = sum_j g[i, j] * b[p, j]: dot of grow with b row p.
        for p in 0..k {
            let brow = &b[p * n..(p + 1) * n];
            let mut acc0 = 0.0;
            let mut acc1 = 0.0;
            let mut acc2 = 0.0;
            let mut acc3 = 0.0;
            let chunks = n / 4;
            for c in 0..chunks {
                let base = c * 4;
                acc0 += grow[base] * brow[base];
                acc1 += grow[base + 1] * brow[base + 1];
                acc2 += grow[base + 2] * brow[base + 2];
                acc3 += grow[base + 3] * brow[base + 3];
            }
            let mut tail = 0.0;
            for c in chunks * 4..n {
                tail += grow[c] * brow[c];
            }
            orow[p] += ((acc0 + acc1) + (acc2 + acc3)) + tail;
        }
    }
}

/// `out(k,n) += a(m,k)^T * g(m,n)` — the dL/dB rule of matmul.
fn gemm_tn_acc(out: &mut [f64], a: &[f64], g: &[f64], m: usize, k: usize, n: usize) {
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        let grow = &g[i * n..(i + 1) * n];
        for (p, &aip) in arow.iter().enumerate() {
            axpy(&mut out[p * n..(p + 1) * n], aip, grow);
        }
    }
}

impl Tape {
    pub fn new() -> Self {
        Tape {
            values: Vec::new(),
            steps: Vec::new(),
            requires: Vec::new(),
            grads: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn push(&mut self, value: Matrix, requires: bool, step: Step) -> Var {
        self.values.push(value);
        self.steps.push(step);
        self.requires.push(requires);
        self.grads.push(None);
        Var(self.values.len() - 1)
    }

    /// Record an input tensor. Only `requires_grad` leaves (and nodes that
    /// depend on them) ever accumulate gradient.
    pub fn leaf(&mut self, value: Matrix, requires_grad: bool) -> Var {
        self.push(value, requires_grad, Step::Leaf)
    }

    /// Leaf that never takes gradient.
    pub fn constant(&mut self, value: Matrix) -> Var {
        self.leaf(value, false)
    }

    pub fn value(&self, v: Var) -> &Matrix {
        &self.values[v.0]
    }

    /// Gradient accumulated for `v`, if any reached it during backward.
    pub fn grad(&self, v: Var) -> Option<&Matrix> {
        self.grads[v.0].as_ref()
    }

    pub fn requires_grad(&self, v: Var) -> bool {
        self.requires[v.0]
    }

    /// Drop all accumulated gradients, keeping values and the record.
    pub fn zero_grads(&mut self) {
        for g in &mut self.grads {
            *g = None;
        }
    }

    fn shape_err(op: &'static str, a: &Matrix, b: &Matrix) -> Error {
        Error::ShapeMismatch {
            op,
            lhs: a.shape(),
            rhs: b.shape(),
        }
    }

    pub fn matmul(&mut self, a: Var, b: Var) -> Result<Var> {
        let (av, bv) = (&self.values[a.0], &self.values[b.0]);
        if av.cols() != bv.rows() {
            return Err(Self::shape_err("matmul", av, bv));
        }
        let (m, k, n) = (av.rows(), av.cols(), bv.cols());
        let mut out = Matrix::zeros(m, n);
        gemm_acc(out.as_mut_slice(), av.as_slice(), bv.as_slice(), m, k, n);
        let req = self.requires[a.0] || self.requires[b.0];
        Ok(self.push(out, req, Step::Matmul { a, b }))
    }

    pub fn transpose(&mut self, x: Var) -> Var {
        let out = self.values[x.0].transposed();
        let req = self.requires[x.0];
        self.push(out, req, Step::Transpose { x })
    }

    pub fn add(&mut self, a: Var, b: Var) -> Result<Var> {
        let (av, bv) = (&self.values[a.0], &self.values[b.0]);
        if av.shape() != bv.shape() {
            return Err(Self::shape_err("add", av, bv));
        }
        let mut out = av.clone();
        for (o, s) in out.as_mut_slice().iter_mut().zip(bv.iter()) {
            *o += s;
        }
        let req = self.requires[a.0] || self.requires[b.0];
        Ok(self.push(out, req, Step::Add { a, b }))
    }

    /// Elementwise (Hadamard) product.
    pub fn mul(&mut self, a: Var, b: Var) -> Result<Var> {
        let (av, bv) = (&self.values[a.0], &self.values[b.0]);
        if av.shape() != bv.shape() {
            return Err(Self::shape_err("mul", av, bv));
        }
        let mut out = av.clone();
        for (o, s) in out.as_mut_slice().iter_mut().zip(bv.iter()) {
            *o *= s;
        }
        let req = self.requires[a.0] || self.requires[b.0];
        Ok(self.push(out, req, Step::Mul { a, b }))
    }

    /// Broadcast a 1xN bias row onto every row of `x`.
    pub fn add_bias(&mut self, x: Var, bias: Var) -> Result<Var> {
        let (xv, bv) = (&self.values[x.0], &self.values[bias.0]);
        if bv.rows() != 1 || bv.cols() != xv.cols() {
            return Err(Self::shape_err("add_bias", xv, bv));
        }
        let mut out = xv.clone();
        let brow = bv.row(0).to_vec();
        for r in 0..out.rows() {
            for (o, s) in out.row_mut(r).iter_mut().zip(&brow) {
                *o += s;
            }
        }
        let req = self.requires[x.0] || self.requires[bias.0];
        Ok(self.push(out, req, Step::AddBias { x, bias }))
    }

    pub fn activate(&mut self, x: Var, kind: Activation) -> Var {
        let xv = &self.values[x.0];
        let mut out = xv.clone();
        match kind {
            Activation::Relu => {
                for v in out.as_mut_slice() {
                    if *v < 0.0 {
                        *v = 0.0;
                    }
                }
            }
            Activation::Tanh => {
                for v in out.as_mut_slice() {
                    *v = v.tanh();
                }
            }
            Activation::Sigmoid => {
                for v in out.as_mut_slice() {
                    *v = sigmoid(*v);
                }
            }
        }
        let req = self.requires[x.0];
        self.push(out, req, Step::Activate { x, kind })
    }

    /// Row-wise softmax with max subtraction; each output row sums to 1.
    pub fn softmax_rows(&mut self, x: Var) -> Var {
        let xv = &self.values[x.0];
        let mut out = xv.clone();
        for r in 0..out.rows() {
            softmax_in_place(out.row_mut(r));
        }
        let req = self.requires[x.0];
        self.push(out, req, Step::SoftmaxRows { x })
    }

    /// Column means: MxN -> 1xN.
    pub fn mean_rows(&mut self, x: Var) -> Result<Var> {
        let xv = &self.values[x.0];
        let (m, n) = xv.shape();
        if m == 0 {
            return Err(Error::Degenerate("mean_rows of an empty matrix".into()));
        }
        let mut out = Matrix::zeros(1, n);
        for r in 0..m {
            axpy(out.row_mut(0), 1.0, xv.row(r));
        }
        for v in out.as_mut_slice() {
            *v /= m as f64;
        }
        let req = self.requires[x.0];
        Ok(self.push(out, req, Step::MeanRows { x }))
    }

    /// Stack tensors vertically; all parts must share a column count.
    pub fn concat_rows(&mut self, parts: &[Var]) -> Result<Var> {
        let first = *parts
            .first()
            .ok_or_else(|| Error::Degenerate("concat_rows of zero tensors".into()))?;
        let n = self.values[first.0].cols();
        let mut rows = 0;
        for p in parts {
            let pv = &self.values[p.0];
            if pv.cols() != n {
                return Err(Self::shape_err("concat_rows", &self.values[first.0], pv));
            }
            rows += pv.rows();
        }
        let mut data = Vec::with_capacity(rows * n);
        for p in parts {
            data.extend_from_slice(self.values[p.0].as_slice());
        }
        let req = parts.iter().any(|p| self.requires[p.0]);
        Ok(self.push(
            Matrix::new(rows, n, data),
            req,
            Step::ConcatRows {
                parts: parts.to_vec(),
            },
        ))
    }

    /// Scale every row to unit Euclidean norm. An all-zero row is an error.
    pub fn l2_normalize_rows(&mut self, x: Var) -> Result<Var> {
        let xv = &self.values[x.0];
        let mut out = xv.clone();
        let mut norms = Vec::with_capacity(out.rows());
        for r in 0..out.rows() {
            let row = out.row_mut(r);
            let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm == 0.0 {
                return Err(Error::Degenerate(format!(
                    "l2_normalize_rows: row {r} is all zero"
                )));
            }
            for v in row.iter_mut() {
                *v /= norm;
            }
            norms.push(norm);
        }
        let req = self.requires[x.0];
        Ok(self.push(out, req, Step::L2NormalizeRows { x, norms }))
    }

    /// Multiply by a plain (non-differentiated) scalar.
    pub fn scalar_scale(&mut self, x: Var, factor: f64) -> Var {
        let mut out = self.values[x.0].clone();
        for v in out.as_mut_slice() {
            *v *= factor;
        }
        let req = self.requires[x.0];
        self.push(out, req, Step::ScalarScale { x, factor })
    }

    /// Negative log softmax probability of `label` for a 1xC logit row.
    pub fn cross_entropy(&mut self, logits: Var, label: usize) -> Result<Var> {
        let lv = &self.values[logits.0];
        if lv.rows() != 1 || lv.cols() == 0 {
            return Err(Error::Degenerate(format!(
                "cross_entropy expects a 1xC logit row, got {:?}",
                lv.shape()
            )));
        }
        if label >= lv.cols() {
            return Err(Error::IndexOutOfRange {
                index: label,
                limit: lv.cols(),
            });
        }
        let row = lv.row(0);
        let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut probs: Vec<f64> = row.iter().map(|v| (v - max).exp()).collect();
        let denom: f64 = probs.iter().sum();
        let loss = denom.ln() - (row[label] - max);
        for p in &mut probs {
            *p /= denom;
        }
        let req = self.requires[logits.0];
        Ok(self.push(
            Matrix::scalar(loss),
            req,
            Step::CrossEntropy {
                logits,
                probs,
                label,
            },
        ))
    }

    /// Mean squared elementwise difference.
    pub fn mse(&mut self, a: Var, b: Var) -> Result<Var> {
        let (av, bv) = (&self.values[a.0], &self.values[b.0]);
        if av.shape() != bv.shape() {
            return Err(Self::shape_err("mse", av, bv));
        }
        if av.is_empty() {
            return Err(Error::Degenerate("mse of empty matrices".into()));
        }
        let sum: f64 = av
            .iter()
            .zip(bv.iter())
            .map(|(x, y)| (x - y) * (x - y))
            .sum();
        let loss = sum / av.len() as f64;
        let req = self.requires[a.0] || self.requires[b.0];
        Ok(self.push(Matrix::scalar(loss), req, Step::Mse { a, b }))
    }

    /// Sum of all entries as a 1x1 scalar.
    pub fn sum_all(&mut self, x: Var) -> Var {
        let total: f64 = self.values[x.0].iter().sum();
        let req = self.requires[x.0];
        self.push(Matrix::scalar(total), req, Step::SumAll { x })
    }

    /// Run the chain rule backward from a scalar loss node. Gradients add
    /// onto whatever is already stored, so callers reusing a tape must
    /// [`Tape::zero_grads`] in between.
    pub fn backward(&mut self, loss: Var) -> Result<()> {
        if self.values[loss.0].shape() != (1, 1) {
            return Err(Error::Degenerate(format!(
                "backward needs a scalar loss, got {:?}",
                self.values[loss.0].shape()
            )));
        }
        match &mut self.grads[loss.0] {
            Some(g) => g.as_mut_slice()[0] += 1.0,
            slot => *slot = Some(Matrix::scalar(1.0)),
        }
        for idx in (0..=loss.0).rev() {
            if !self.requires[idx] {
                continue;
            }
            let Some(grad) = self.grads[idx].take() else {
                continue;
            };
            self.propagate(idx, &grad);
            self.grads[idx] = Some(grad);
        }
        Ok(())
    }

    /// Add `f`'s output into the gradient buffer of `target` if it wants one.
    fn accumulate(&mut self, target: Var, f: impl FnOnce(&Matrix, &mut Matrix)) {
        if !self.requires[target.0] {
            return;
        }
        let shape = self.values[target.0].shape();
        let mut buf = self.grads[target.0]
            .take()
            .unwrap_or_else(|| Matrix::zeros(shape.0, shape.1));
        // values are not mutated during backward, so the read is safe;
        // split the borrow by taking the buffer out first.
        let value = &self.values[target.0];
        f(value, &mut buf);
        self.grads[target.0] = Some(buf);
    }

    fn propagate(&mut self, idx: usize, grad: &Matrix) {
        // clone the step descriptor (cheap: Vars and small caches) so the
        // borrow on self.steps ends before we mutate gradient buffers.
        let step = self.steps[idx].clone();
        match step {
            Step::Leaf => {}
            Step::Matmul { a, b } => {
                let (m, k) = self.values[a.0].shape();
                let n = self.values[b.0].cols();
                if self.requires[a.0] {
                    let bvals = std::mem::replace(&mut self.values[b.0], Matrix::zeros(0, 0));
                    self.accumulate(a, |_, buf| {
                        gemm_nt_acc(
                            buf.as_mut_slice(),
                            grad.as_slice(),
                            bvals.as_slice(),
                            m,
                            k,
                            n,
                        );
                    });
                    self.values[b.0] = bvals;
                }
                if self.requires[b.0] {
                    let avals = std::mem::replace(&mut self.values[a.0], Matrix::zeros(0, 0));
                    self.accumulate(b, |_, buf| {
                        gemm_tn_acc(
                            buf.as_mut_slice(),
                            avals.as_slice(),
                            grad.as_slice(),
                            m,
                            k,
                            n,
                        );
                    });
                    self.values[a.0] = avals;
                }
            }
            Step::Transpose { x } => {
                let gt = grad.transposed();
                self.accumulate(x, |_, buf| {
                    for (o, s) in buf.as_mut_slice().iter_mut().zip(gt.iter()) {
                        *o += s;
                    }
                });
            }
            Step::Add { a, b } => {
                for t in [a, b] {
                    self.accumulate(t, |_, buf| {
                        for (o, s) in buf.as_mut_slice().iter_mut().zip(grad.iter()) {
                            *o += s;
                        }
                    });
                }
            }
            Step::Mul { a, b } => {
                if self.requires[a.0] {
                    let bvals = std::mem::replace(&mut self.values[b.0], Matrix::zeros(0, 0));
                    self.accumulate(a, |_, buf| {
                        for ((o, g), s) in
                            buf.as_mut_slice().iter_mut().zip(grad.iter()).zip(bvals.iter())
                        {
                            *o += g * s;
                        }
                    });
                    self.values[b.0] = bvals;
                }
                if self.requires[b.0] {
                    let avals = std::mem::replace(&mut self.values[a.0], Matrix::zeros(0, 0));
                    self.accumulate(b, |_, buf| {
                        for ((o, g), s) in
                            buf.as_mut_slice().iter_mut().zip(grad.iter()).zip(avals.iter())
                        {
                            *o += g * s;
                        }
                    });
                    self.values[a.0] = avals;
                }
            }
            Step::AddBias { x, bias } => {
                self.accumulate(x, |_, buf| {
                    for (o, s) in buf.as_mut_slice().iter_mut().zip(grad.iter()) {
                        *o += s;
                    }
                });
                let n = grad.cols();
                self.accumulate(bias, |_, buf| {
                    let brow = buf.row_mut(0);
                    for r in 0..grad.rows() {
                        axpy(brow, 1.0, &grad.as_slice()[r * n..(r + 1) * n]);
                    }
                });
            }
            Step::Activate { x, kind } => {
                // relu differentiates on the input, tanh/sigmoid on the output
                let out_vals = std::mem::replace(&mut self.values[idx], Matrix::zeros(0, 0));
                self.accumulate(x, |xv, buf| match kind {
                    Activation::Relu => {
                        for ((o, g), v) in
                            buf.as_mut_slice().iter_mut().zip(grad.iter()).zip(xv.iter())
                        {
                            if *v > 0.0 {
                                *o += g;
                            }
                        }
                    }
                    Activation::Tanh => {
                        for ((o, g), y) in buf
                            .as_mut_slice()
                            .iter_mut()
                            .zip(grad.iter())
                            .zip(out_vals.iter())
                        {
                            *o += g * (1.0 - y * y);
                        }
                    }
                    Activation::Sigmoid => {
                        for ((o, g), y) in buf
                            .as_mut_slice()
                            .iter_mut()
                            .zip(grad.iter())
                            .zip(out_vals.iter())
                        {
                            *o += g * y * (1.0 - y);
                        }
                    }
                });
                self.values[idx] = out_vals;
            }
            Step::SoftmaxRows { x } => {
                let yvals = std::mem::replace(&mut self.values[idx], Matrix::zeros(0, 0));
                let n = yvals.cols();
                self.accumulate(x, |_, buf| {
                    for r in 0..yvals.rows() {
                        let y = yvals.row(r);
                        let g = &grad.as_slice()[r * n..(r + 1) * n];
                        let dot: f64 = y.iter().zip(g).map(|(a, b)| a * b).sum();
                        let brow = &mut buf.as_mut_slice()[r * n..(r + 1) * n];
                        for ((o, &yv), &gv) in brow.iter_mut().zip(y).zip(g) {
                            *o += yv * (gv - dot);
                        }
                    }
                });
                self.values[idx] = yvals;
            }
            Step::MeanRows { x } => {
                let m = self.values[x.0].rows();
                let inv = 1.0 / m as f64;
                self.accumulate(x, |_, buf| {
                    let n = grad.cols();
                    for r in 0..m {
                        axpy(&mut buf.as_mut_slice()[r * n..(r + 1) * n], inv, grad.row(0));
                    }
                });
            }
            Step::ConcatRows { parts } => {
                let n = grad.cols();
                let mut offset = 0;
                for p in parts {
                    let rows = self.values[p.0].rows();
                    let slice_start = offset * n;
                    let slice_end = (offset + rows) * n;
                    self.accumulate(p, |_, buf| {
                        for (o, s) in buf
                            .as_mut_slice()
                            .iter_mut()
                            .zip(&grad.as_slice()[slice_start..slice_end])
                        {
                            *o += s;
                        }
                    });
                    offset += rows;
                }
            }
            Step::L2NormalizeRows { x, norms } => {
                let yvals = std::mem::replace(&mut self.values[idx], Matrix::zeros(0, 0));
                let n = yvals.cols();
                self.accumulate(x, |_, buf| {
                    for r in 0..yvals.rows() {
                        let y = yvals.row(r);
                        let g = &grad.as_slice()[r * n..(r + 1) * n];
                        let dot: f64 = y.iter().zip(g).map(|(a, b)| a * b).sum();
                        let inv = 1.0 / norms[r];
                        let brow = &mut buf.as_mut_slice()[r * n..(r + 1) * n];
                        for ((o, &yv), &gv) in brow.iter_mut().zip(y).zip(g) {
                            *o += (gv - yv * dot) * inv;
                        }
                    }
                });
                self.values[idx] = yvals;
            }
            Step::ScalarScale { x, factor } => {
                self.accumulate(x, |_, buf| {
                    for (o, s) in buf.as_mut_slice().iter_mut().zip(grad.iter()) {
                        *o += factor * s;
                    }
                });
            }
            Step::CrossEntropy {
                logits,
                probs,
                label,
            } => {
                let g = grad.item();
                self.accumulate(logits, |_, buf| {
                    let row = buf.row_mut(0);
                    for (j, (o, p)) in row.iter_mut().zip(&probs).enumerate() {
                        let target = if j == label { 1.0 } else { 0.0 };
                        *o += g * (p - target);
                    }
                });
            }
            Step::Mse { a, b } => {
                let g = grad.item();
                let n = self.values[a.0].len() as f64;
                let coef = 2.0 * g / n;
                if self.requires[a.0] {
                    let bvals = std::mem::replace(&mut self.values[b.0], Matrix::zeros(0, 0));
                    self.accumulate(a, |av, buf| {
                        for ((o, x), y) in
                            buf.as_mut_slice().iter_mut().zip(av.iter()).zip(bvals.iter())
                        {
                            *o += coef * (x - y);
                        }
                    });
                    self.values[b.0] = bvals;
                }
                if self.requires[b.0] {
                    let avals = std::mem::replace(&mut self.values[a.0], Matrix::zeros(0, 0));
                    self.accumulate(b, |bv, buf| {
                        for ((o, y), x) in
                            buf.as_mut_slice().iter_mut().zip(bv.iter()).zip(avals.iter())
                        {
                            *o += coef * (y - x);
                        }
                    });
                    self.values[a.0] = avals;
                }
            }
            Step::SumAll { x } => {
                let g = grad.item();
                self.accumulate(x, |_, buf| {
                    for o in buf.as_mut_slice() {
                        *o += g;
                    }
                });
            }
        }
    }
}

impl Default for Tape {
    fn default() -> Self {
        Tape::new()
    }
}

#[inline]
fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

fn softmax_in_place(row: &mut [f64]) {
    let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut denom = 0.0;
    for v in row.iter_mut() {
        *v = (*v - max).exp();
        denom += *v;
    }
    for v in row.iter_mut() {
        *v /= denom;
    }
}
