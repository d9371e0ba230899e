//! Multimodal hypergraph-contrastive fault diagnosis for rotating machinery.
//!
//! The pipeline runs framework-free from raw motor-like signals to class
//! probabilities: segmentation and z-score normalization, STFT spectrogram
//! images, a dual-stream encoder (1-D conv + LSTM for the waveform, a compact
//! residual conv net for the spectrogram), cosine-KNN hypergraph construction
//! over feature dimensions, two-layer HGNN refinement per modality, attention
//! fusion, and a softmax classifier trained with cross-entropy plus a triplet
//! margin loss. A reverse-mode tape in [`tensor`] supplies gradients for the
//! whole model; [`signal`] ships a deterministic synthetic-fault generator so
//! every architectural claim can be exercised without external datasets.

pub mod commands;
pub mod config;
pub mod dataset;
pub mod encoders;
pub mod fusion;
pub mod hypergraph;
pub mod loss;
pub mod metrics;
pub mod model;
pub mod perturb;
pub mod report;
pub mod signal;
pub mod stft;
pub mod tensor;
pub mod train;

/// Scalar element type of the numeric stack. `f32` by default; the `f64`
/// feature switches the whole pipeline to double precision (useful for tight
/// gradient-check tolerances).
#[cfg(feature = "f64")]
pub type Elem = f64;
#[cfg(not(feature = "f64"))]
pub type Elem = f32;

/// True when the crate was built with the `f64` feature.
pub const ELEM_IS_F64: bool = cfg!(feature = "f64");

/// Shorthand cast used when a computation is done in `f64` and stored as [`Elem`].
#[inline]
pub fn ef(x: f64) -> Elem {
    x as Elem
}
