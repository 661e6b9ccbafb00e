//! Long-tailed multiple-instance classification with a dual-distribution
//! expert ensemble and prompt-based text distillation.
//!
//! A bag is an unordered set of instance embeddings carrying a single label.
//! Training draws paired samples from the natural (imbalanced) distribution
//! and a class-rebalanced distribution, pools each bag through a weight-shared
//! attention aggregator, classifies both through per-distribution expert
//! heads tied together by a consistency penalty, and additionally aligns the
//! pooled embeddings with learnable class prompts in a text-embedding space.
//!
//! Everything runs on a small self-contained reverse-mode autodiff engine
//! over dense 2-D `f64` arrays, so training is deterministic given a seed.

pub mod autodiff;
pub mod bags;
pub mod distill;
pub mod error;
pub mod eval;
pub mod model;
pub mod rng;
pub mod samplers;
pub mod trainer;

pub use error::{Error, Result};
