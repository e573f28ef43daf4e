//! Pass/fail records produced by the verification suites.

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::rational::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub r: usize,
    pub d: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub omega: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_weight: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<usize>,
}

impl Params {
    pub fn new(r: usize, d: &Rational) -> Self {
        Params {
            r,
            d: format_rational(d),
            ..Params::default()
        }
    }

    pub fn with_partition(mut self, m: &Partition) -> Self {
        self.partition = Some(m.clone());
        self
    }

    pub fn with_max_weight(mut self, w: u32) -> Self {
        self.max_weight = Some(w);
        self
    }

    pub fn with_omega(mut self, omega: &[Rational]) -> Self {
        self.n = Some(omega.len());
        self.omega = Some(omega.iter().map(format_rational).collect());
        self
    }

    pub fn with_j(mut self, j: usize) -> Self {
        self.j = Some(j);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub partition: Partition,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Params,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn pass(identity: impl Into<String>, params: Params) -> Self {
        VerificationReport {
            identity: identity.into(),
            params,
            status: Status::Pass,
            counterexample: None,
        }
    }

    pub fn fail(identity: impl Into<String>, params: Params, ce: Counterexample) -> Self {
        VerificationReport {
            identity: identity.into(),
            params,
            status: Status::Fail,
            counterexample: Some(ce),
        }
    }

    /// Passes iff `lhs == rhs`; on failure both sides are recorded.
    pub fn compare<T: PartialEq + ToString>(
        identity: impl Into<String>,
        params: Params,
        m: &Partition,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        if lhs == rhs {
            Self::pass(identity, params)
        } else {
            Self::fail(
                identity,
                params,
                Counterexample {
                    partition: m.clone(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                },
            )
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One JSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
