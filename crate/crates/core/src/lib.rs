//! Audio-only egocentric action recognition pipeline.
//!
//! The crate covers the full path from raw WAVE files to evaluation reports:
//!
//! - [`audio_io`]: 16-bit PCM decoding, stereo downmix, resampling to 16 kHz,
//!   and timestamp slicing of labeled segments.
//! - [`dsp`]: fixed-window log-power spectrogram featurization producing the
//!   331x248 images the classifier consumes, plus the `EGOSPEC1` feature file
//!   format.
//! - [`dataset`]: manifest ingestion, class filtering, duration statistics,
//!   and the stratified / action-aware train/val/test split procedures.
//! - [`nnet`]: a small tensor framework with backpropagation, a width-scalable
//!   VGG-11, SGD with momentum, and the `EGONET01` checkpoint format.
//! - [`eval`]: top-k accuracy, macro precision/recall, confusion matrices,
//!   chance baselines, and verb x noun action-score composition.
//! - [`synth`]: deterministic signal generators for fixtures and tests.

pub mod audio_io;
pub mod dataset;
pub mod dsp;
pub mod eval;
pub mod nnet;
pub mod seeded;
pub mod synth;
