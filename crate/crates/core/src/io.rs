//! JSON wire formats for channels and generators.
//!
//! Channel: `{"dim": d, "kraus": [[[re, im], ... d^2 entries row-major], ...]}`.
//! Generator: the same envelope with either a raw `"superop"` (d^2 x d^2
//! entries, row-major) or a Lindblad pair `"phi_kraus"` / `"kappa"`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::channels::{Liouvillian, QuantumChannel};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::Real;

type Entry = [Real; 2];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChannelJson {
    pub dim: usize,
    pub kraus: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiouvillianJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superop: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_kraus: Option<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Vec<Entry>>,
}

fn matrix_from_entries(field: &str, dim: usize, entries: &[Entry]) -> Result<Mat<Real>> {
    if entries.len() != dim * dim {
        return Err(Error::InvalidInput {
            field: field.into(),
            message: format!("expected {} entries, got {}", dim * dim, entries.len()),
        });
    }
    let data: Vec<Complex<Real>> = entries.iter().map(|e| Complex::new(e[0], e[1])).collect();
    Ok(Mat::from_rows(dim, &data))
}

fn matrix_to_entries(m: &Mat<Real>) -> Vec<Entry> {
    m.data().iter().map(|z| [z.re, z.im]).collect()
}

pub fn channel_to_json(channel: &QuantumChannel<Real>) -> ChannelJson {
    ChannelJson {
        dim: channel.dim(),
        kraus: channel.kraus().iter().map(matrix_to_entries).collect(),
    }
}

pub fn channel_from_json(json: &ChannelJson) -> Result<QuantumChannel<Real>> {
    if json.dim == 0 {
        return Err(Error::InvalidInput { field: "dim".into(), message: "dim must be >= 1".into() });
    }
    let mut kraus = Vec::with_capacity(json.kraus.len());
    for (i, entries) in json.kraus.iter().enumerate() {
        kraus.push(matrix_from_entries(&format!("kraus[{i}]"), json.dim, entries)?);
    }
    QuantumChannel::from_kraus(kraus)
}

pub fn channel_from_str(text: &str) -> Result<QuantumChannel<Real>> {
    let json: ChannelJson = serde_json::from_str(text)?;
    channel_from_json(&json)
}

pub fn liouvillian_to_json(l: &Liouvillian<Real>) -> LiouvillianJson {
    match l.lindblad() {
        Some(form) => LiouvillianJson {
            dim: l.dim(),
            superop: None,
            phi_kraus: Some(form.phi_kraus.iter().map(matrix_to_entries).collect()),
            kappa: Some(matrix_to_entries(&form.kappa)),
        },
        None => LiouvillianJson {
            dim: l.dim(),
            superop: Some(matrix_to_entries(l.superop())),
            phi_kraus: None,
            kappa: None,
        },
    }
}

pub fn liouvillian_from_json(json: &LiouvillianJson) -> Result<Liouvillian<Real>> {
    if json.dim == 0 {
        return Err(Error::InvalidInput { field: "dim".into(), message: "dim must be >= 1".into() });
    }
    match (&json.phi_kraus, &json.kappa, &json.superop) {
        (Some(kraus_entries), Some(kappa_entries), _) => {
            let mut phi_kraus = Vec::with_capacity(kraus_entries.len());
            for (i, entries) in kraus_entries.iter().enumerate() {
                phi_kraus.push(matrix_from_entries(&format!("phi_kraus[{i}]"), json.dim, entries)?);
            }
            let kappa = matrix_from_entries("kappa", json.dim, kappa_entries)?;
            Liouvillian::from_lindblad(phi_kraus, kappa)
        }
        (None, None, Some(entries)) => {
            let superop = matrix_from_entries("superop", json.dim * json.dim, entries)?;
            Liouvillian::from_superop(superop)
        }
        (Some(_), None, _) | (None, Some(_), _) => Err(Error::InvalidInput {
            field: "phi_kraus/kappa".into(),
            message: "Lindblad input needs both phi_kraus and kappa".into(),
        }),
        (None, None, None) => Err(Error::InvalidInput {
            field: "superop".into(),
            message: "provide either a superop or a phi_kraus/kappa pair".into(),
        }),
    }
}

pub fn liouvillian_from_str(text: &str) -> Result<Liouvillian<Real>> {
    let json: LiouvillianJson = serde_json::from_str(text)?;
    liouvillian_from_json(&json)
}
