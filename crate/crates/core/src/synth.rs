//! Deterministic signal generators for fixtures and pipeline tests.

use rand::Rng;

use crate::audio_io::AudioClip;
use crate::seeded::substream_rng;

/// Pure tone at `freq_hz`.
pub fn sine_clip(freq_hz: f64, duration_secs: f64, sample_rate: u32, amplitude: f32) -> AudioClip {
    let n = (duration_secs * f64::from(sample_rate)).round() as usize;
    let samples = (0..n)
        .map(|i| {
            let t = i as f64 / f64::from(sample_rate);
            amplitude * (2.0 * std::f64::consts::PI * freq_hz * t).sin() as f32
        })
        .collect();
    AudioClip::mono(samples, sample_rate)
}

/// Linear chirp sweeping from `f0_hz` to `f1_hz` over the clip duration.
pub fn chirp_clip(
    f0_hz: f64,
    f1_hz: f64,
    duration_secs: f64,
    sample_rate: u32,
    amplitude: f32,
) -> AudioClip {
    let n = (duration_secs * f64::from(sample_rate)).round() as usize;
    let sweep = (f1_hz - f0_hz) / (2.0 * duration_secs);
    let samples = (0..n)
        .map(|i| {
            let t = i as f64 / f64::from(sample_rate);
            let phase = 2.0 * std::f64::consts::PI * (f0_hz * t + sweep * t * t);
            amplitude * phase.sin() as f32
        })
        .collect();
    AudioClip::mono(samples, sample_rate)
}

/// Seeded uniform white noise in [-amplitude, amplitude].
pub fn noise_clip(duration_secs: f64, sample_rate: u32, amplitude: f32, seed: u64) -> AudioClip {
    let mut rng = substream_rng(seed, "synth-noise");
    let n = (duration_secs * f64::from(sample_rate)).round() as usize;
    let samples = (0..n)
        .map(|_| amplitude * (rng.gen::<f32>() * 2.0 - 1.0))
        .collect();
    AudioClip::mono(samples, sample_rate)
}
