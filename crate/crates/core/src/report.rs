//! JSON shapes emitted by the command-line tool and the C interface.
//!
//! Fields are declared in alphabetical order so the serialized key order is
//! stable; counts are strings so consumers never lose precision.

use serde::{Deserialize, Serialize};

use crate::counting::CountReport;
use crate::verify::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub orbit_len: u64,
    pub rep_size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub a: u32,
    pub count: String,
    pub mod_p: u64,
    pub mod_p2: u64,
    pub orbits: Vec<OrbitJson>,
    pub p: u64,
    pub spec: String,
    pub sylow_order: String,
}

impl From<&CountReport> for CountJson {
    fn from(r: &CountReport) -> Self {
        CountJson {
            a: r.a,
            count: r.count.to_string(),
            mod_p: r.mod_p(),
            mod_p2: r.mod_p2(),
            orbits: r
                .orbits
                .iter()
                .map(|o| OrbitJson {
                    orbit_len: o.orbit_len,
                    rep_size: o.representative.order() as u64,
                })
                .collect(),
            p: r.p,
            spec: r.spec.clone(),
            sylow_order: r.sylow_order.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub a: u32,
    pub spec: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub n: u64,
    pub notes: Vec<String>,
    pub p: u64,
    pub status: String,
    pub witness: Option<WitnessJson>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            n: v.n,
            notes: v.notes.clone(),
            p: v.p,
            status: v.status.to_string(),
            witness: v.witness.as_ref().map(|w| WitnessJson {
                a: w.a,
                spec: w.spec.to_string(),
            }),
        }
    }
}

/// Compact single-line JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types always serialize")
}
