//! PCM audio decoding and canonicalization.
//!
//! Input is RIFF/WAVE holding 16-bit signed PCM with one or two channels.
//! Clips are canonicalized to mono 16 kHz before featurization: channels are
//! averaged first, then the mono signal is resampled.

use thiserror::Error;

/// Canonical sample rate of the pipeline.
pub const CANONICAL_RATE: u32 = 16_000;

#[derive(Debug, Error)]
pub enum AudioError {
    #[error("malformed WAVE data: {0}")]
    Format(String),
    #[error("unsupported encoding: {0}")]
    UnsupportedEncoding(String),
    #[error("unsupported channel count: {0}")]
    UnsupportedChannelCount(usize),
    #[error("invalid sample rate: {0}")]
    InvalidSampleRate(u32),
    #[error("invalid segment range: start {start}s must be >= 0 and < stop {stop}s")]
    InvalidRange { start: f64, stop: f64 },
    #[error("empty segment: start {start}s is at or beyond the clip end ({duration}s)")]
    EmptySegment { start: f64, duration: f64 },
}

pub type Result<T> = std::result::Result<T, AudioError>;

/// A decoded waveform: one amplitude sequence per channel, all equal length,
/// amplitudes in [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct AudioClip {
    channels: Vec<Vec<f32>>,
    sample_rate: u32,
}

impl AudioClip {
    /// Build a clip from per-channel samples. All channels must have equal
    /// length and there must be at least one channel.
    pub fn new(channels: Vec<Vec<f32>>, sample_rate: u32) -> Self {
        assert!(!channels.is_empty(), "clip needs at least one channel");
        assert!(sample_rate > 0, "sample rate must be positive");
        let len = channels[0].len();
        assert!(
            channels.iter().all(|c| c.len() == len),
            "all channels must have equal length"
        );
        Self { channels, sample_rate }
    }

    /// Mono clip from a single sample sequence.
    pub fn mono(samples: Vec<f32>, sample_rate: u32) -> Self {
        Self::new(vec![samples], sample_rate)
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    pub fn num_channels(&self) -> usize {
        self.channels.len()
    }

    /// Per-channel length in samples.
    pub fn len(&self) -> usize {
        self.channels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn duration_secs(&self) -> f64 {
        self.len() as f64 / f64::from(self.sample_rate)
    }

    pub fn channel(&self, index: usize) -> &[f32] {
        &self.channels[index]
    }

    pub fn is_mono(&self) -> bool {
        self.channels.len() == 1
    }

    /// Samples of a mono clip. Panics when the clip is not mono.
    pub fn mono_samples(&self) -> &[f32] {
        assert!(self.is_mono(), "clip is not mono");
        &self.channels[0]
    }
}

/// Decode a RIFF/WAVE file holding 16-bit signed PCM, 1 or 2 channels.
/// Integer samples map to [-1, 1] by division with 32768.
pub fn decode_pcm(bytes: &[u8]) -> Result<AudioClip> {
    let mut cursor = RiffCursor::new(bytes)?;
    let fmt = loop {
        let chunk = cursor.next_chunk()?;
        match chunk {
            Some(("fmt ", payload)) => break parse_fmt(payload)?,
            Some(("data", _)) => {
                return Err(AudioError::Format("data chunk before fmt chunk".into()))
            }
            Some(_) => continue,
            None => return Err(AudioError::Format("missing fmt chunk".into())),
        }
    };
    let data = loop {
        match cursor.next_chunk()? {
            Some(("data", payload)) => break payload,
            Some(_) => continue,
            None => return Err(AudioError::Format("missing data chunk".into())),
        }
    };

    let bytes_per_frame = fmt.channels * 2;
    if data.len() % bytes_per_frame != 0 {
        return Err(AudioError::Format(format!(
            "data chunk length {} is not a multiple of the {}-byte frame",
            data.len(),
            bytes_per_frame
        )));
    }
    let frames = data.len() / bytes_per_frame;
    let mut channels = vec![Vec::with_capacity(frames); fmt.channels];
    for frame in data.chunks_exact(bytes_per_frame) {
        for (ch, sample) in frame.chunks_exact(2).enumerate() {
            let value = i16::from_le_bytes([sample[0], sample[1]]);
            channels[ch].push(f32::from(value) / 32768.0);
        }
    }
    Ok(AudioClip::new(channels, fmt.sample_rate))
}

/// Encode a clip as a 16-bit PCM RIFF/WAVE file. Amplitudes are clamped to
/// [-1, 1] and scaled by 32767; the inverse of [`decode_pcm`] up to that
/// quantization.
pub fn encode_wav_pcm16(clip: &AudioClip) -> Vec<u8> {
    let channels = clip.num_channels() as u32;
    let frames = clip.len() as u32;
    let data_size = frames * channels * 2;
    let mut out = Vec::with_capacity(44 + data_size as usize);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_size).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes()); // PCM
    out.extend_from_slice(&(channels as u16).to_le_bytes());
    out.extend_from_slice(&clip.sample_rate().to_le_bytes());
    out.extend_from_slice(&(clip.sample_rate() * channels * 2).to_le_bytes());
    out.extend_from_slice(&((channels * 2) as u16).to_le_bytes());
    out.extend_from_slice(&16u16.to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_size.to_le_bytes());
    for i in 0..clip.len() {
        for ch in 0..clip.num_channels() {
            let v = (clip.channel(ch)[i].clamp(-1.0, 1.0) * 32767.0).round() as i16;
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    out
}

/// Average all channels into one. Mono input is returned unchanged.
pub fn downmix(clip: &AudioClip) -> Result<AudioClip> {
    match clip.num_channels() {
        1 => Ok(clip.clone()),
        2 => {
            let (left, right) = (clip.channel(0), clip.channel(1));
            let samples = left
                .iter()
                .zip(right)
                .map(|(&l, &r)| (l + r) / 2.0)
                .collect();
            Ok(AudioClip::mono(samples, clip.sample_rate()))
        }
        n => Err(AudioError::UnsupportedChannelCount(n)),
    }
}

/// Resample a mono clip by linear interpolation. Equal source and target
/// rates pass the samples through bit-exactly. Output length is
/// `round(len * target / source)`.
pub fn resample(clip: &AudioClip, target_rate: u32) -> Result<AudioClip> {
    if !clip.is_mono() {
        return Err(AudioError::UnsupportedChannelCount(clip.num_channels()));
    }
    if target_rate == 0 {
        return Err(AudioError::InvalidSampleRate(target_rate));
    }
    if clip.sample_rate() == target_rate {
        return Ok(clip.clone());
    }
    let input = clip.mono_samples();
    if input.is_empty() {
        return Ok(AudioClip::mono(Vec::new(), target_rate));
    }
    let ratio = f64::from(clip.sample_rate()) / f64::from(target_rate);
    let out_len = (input.len() as f64 / ratio).round() as usize;
    let mut out = Vec::with_capacity(out_len);
    for j in 0..out_len {
        let pos = j as f64 * ratio;
        let i = pos.floor() as usize;
        if i + 1 >= input.len() {
            out.push(input[input.len() - 1]);
        } else {
            let frac = (pos - i as f64) as f32;
            out.push(input[i] + (input[i + 1] - input[i]) * frac);
        }
    }
    Ok(AudioClip::mono(out, target_rate))
}

/// Cut `[start_sec, stop_sec)` out of a mono clip. The stop index is clamped
/// to the clip length.
pub fn slice_segment(clip: &AudioClip, start_sec: f64, stop_sec: f64) -> Result<AudioClip> {
    if !clip.is_mono() {
        return Err(AudioError::UnsupportedChannelCount(clip.num_channels()));
    }
    if !(start_sec >= 0.0 && start_sec < stop_sec) {
        return Err(AudioError::InvalidRange { start: start_sec, stop: stop_sec });
    }
    let rate = f64::from(clip.sample_rate());
    let start = (start_sec * rate).round() as usize;
    let stop = ((stop_sec * rate).round() as usize).min(clip.len());
    if start >= clip.len() {
        return Err(AudioError::EmptySegment { start: start_sec, duration: clip.duration_secs() });
    }
    Ok(AudioClip::mono(
        clip.mono_samples()[start..stop].to_vec(),
        clip.sample_rate(),
    ))
}

struct FmtChunk {
    channels: usize,
    sample_rate: u32,
}

fn parse_fmt(payload: &[u8]) -> Result<FmtChunk> {
    if payload.len() < 16 {
        return Err(AudioError::Format("fmt chunk shorter than 16 bytes".into()));
    }
    let format = u16::from_le_bytes([payload[0], payload[1]]);
    if format != 1 {
        return Err(AudioError::UnsupportedEncoding(format!(
            "audio format tag {format} (only PCM, tag 1, is supported)"
        )));
    }
    let channels = u16::from_le_bytes([payload[2], payload[3]]) as usize;
    if channels == 0 {
        return Err(AudioError::Format("fmt declares zero channels".into()));
    }
    if channels > 2 {
        return Err(AudioError::UnsupportedChannelCount(channels));
    }
    let sample_rate = u32::from_le_bytes([payload[4], payload[5], payload[6], payload[7]]);
    if sample_rate == 0 {
        return Err(AudioError::InvalidSampleRate(sample_rate));
    }
    let bits = u16::from_le_bytes([payload[14], payload[15]]);
    if bits != 16 {
        return Err(AudioError::UnsupportedEncoding(format!(
            "{bits}-bit samples (only 16-bit PCM is supported)"
        )));
    }
    let block_align = u16::from_le_bytes([payload[12], payload[13]]) as usize;
    if block_align != channels * 2 {
        return Err(AudioError::Format(format!(
            "block align {block_align} disagrees with {channels} channels of 16-bit samples"
        )));
    }
    Ok(FmtChunk { channels, sample_rate })
}

/// Walks the chunks of a RIFF/WAVE container.
struct RiffCursor<'a> {
    bytes: &'a [u8],
    offset: usize,
}

impl<'a> RiffCursor<'a> {
    fn new(bytes: &'a [u8]) -> Result<Self> {
        if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
            return Err(AudioError::Format("not a RIFF/WAVE container".into()));
        }
        Ok(Self { bytes, offset: 12 })
    }

    /// Next (chunk id, payload), or None at end of file.
    fn next_chunk(&mut self) -> Result<Option<(&'a str, &'a [u8])>> {
        if self.offset == self.bytes.len() {
            return Ok(None);
        }
        if self.offset + 8 > self.bytes.len() {
            return Err(AudioError::Format("truncated chunk header".into()));
        }
        let id = &self.bytes[self.offset..self.offset + 4];
        let id = std::str::from_utf8(id)
            .map_err(|_| AudioError::Format("non-ASCII chunk id".into()))?;
        let size = u32::from_le_bytes(
            self.bytes[self.offset + 4..self.offset + 8].try_into().unwrap(),
        ) as usize;
        let start = self.offset + 8;
        if start + size > self.bytes.len() {
            return Err(AudioError::Format(format!(
                "chunk '{id}' declares {size} bytes but only {} remain",
                self.bytes.len() - start
            )));
        }
        // Chunks are word-aligned; odd sizes carry a pad byte.
        self.offset = start + size + (size % 2);
        if self.offset > self.bytes.len() {
            self.offset = self.bytes.len();
        }
        Ok(Some((id, &self.bytes[start..start + size])))
    }
}
