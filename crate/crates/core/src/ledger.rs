//! Named torsion families of `pi_* Tmf` on which every Adams operation acts
//! as the identity.
//!
//! The built-in entries are `alpha Delta^{3(l+1)}` (p = 3), `eta Delta^{8(l+1)}`
//! and `nu Delta^{8(l+1)}` (p = 2). Additional families can be loaded from a
//! JSON list of `{family, prime, degree_offset, degree_period, orders}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::FinAbGroup;

/// Environment variable naming a ledger file to load on top of the built-ins.
pub const LEDGER_ENV: &str = "TMF_ADAMS_LEDGER";

/// A family of classes in degrees `degree_offset + degree_period * l`, `l >= 0`,
/// each generating a copy of `⨁ Z/orders[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionLedgerEntry {
    pub family: String,
    pub prime: u64,
    pub degree_offset: i64,
    pub degree_period: i64,
    pub orders: Vec<u64>,
}

impl TorsionLedgerEntry {
    pub fn degree(&self, l: u64) -> i64 {
        self.degree_offset + self.degree_period * l as i64
    }

    /// The parameter `l` with `degree(l) == k`, if any.
    pub fn parameter_for(&self, k: i64) -> Option<u64> {
        let d = k - self.degree_offset;
        if d < 0 || d % self.degree_period != 0 {
            return None;
        }
        Some((d / self.degree_period) as u64)
    }

    pub fn group(&self) -> FinAbGroup {
        FinAbGroup::new(0, self.orders.iter().copied())
    }

    fn validate(&self) -> Result<()> {
        if self.degree_period <= 0 {
            return Err(Error::Ledger(format!("{}: degree_period must be positive", self.family)));
        }
        if self.orders.is_empty() || self.orders.iter().any(|&d| d < 2) {
            return Err(Error::Ledger(format!("{}: orders must be >= 2", self.family)));
        }
        if self.orders.iter().any(|&d| crate::exactmath::prime_factors(d) != [self.prime]) {
            return Err(Error::Ledger(format!(
                "{}: orders must be powers of {}",
                self.family, self.prime
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TorsionLedger {
    entries: Vec<TorsionLedgerEntry>,
}

impl Default for TorsionLedger {
    fn default() -> Self {
        Self::builtin()
    }
}

impl TorsionLedger {
    pub fn builtin() -> Self {
        let entry = |family: &str, prime, offset, period, order| TorsionLedgerEntry {
            family: family.into(),
            prime,
            degree_offset: offset,
            degree_period: period,
            orders: vec![order],
        };
        Self {
            entries: vec![
                // |alpha| = 3, |Delta^3| = 72
                entry("alpha*Delta^{3(l+1)}", 3, 75, 72, 3),
                // |eta| = 1, |Delta^8| = 192
                entry("eta*Delta^{8(l+1)}", 2, 193, 192, 2),
                // |nu| = 3; the order is declared data
                entry("nu*Delta^{8(l+1)}", 2, 195, 192, 8),
            ],
        }
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[TorsionLedgerEntry] {
        &self.entries
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let entries: Vec<TorsionLedgerEntry> =
            serde_json::from_str(json).map_err(|e| Error::Ledger(e.to_string()))?;
        for e in &entries {
            e.validate()?;
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Ledger(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Built-ins plus the file named by `path`, or by [`LEDGER_ENV`] if `path` is `None`.
    pub fn with_overrides(path: Option<&Path>) -> Result<Self> {
        let mut ledger = Self::builtin();
        let env = std::env::var_os(LEDGER_ENV);
        let path = path.or(env.as_deref().map(Path::new));
        if let Some(p) = path {
            ledger.extend(Self::load(p)?);
        }
        Ok(ledger)
    }

    /// Adds entries, skipping exact duplicates.
    pub fn extend(&mut self, other: TorsionLedger) {
        for e in other.entries {
            if !self.entries.contains(&e) {
                self.entries.push(e);
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.entries).expect("ledger entries serialize")
    }

    /// Entries at prime `p` with a class in degree `k`, paired with their parameter `l`.
    pub fn lookup(&self, p: u64, k: i64) -> Vec<(&TorsionLedgerEntry, u64)> {
        self.entries
            .iter()
            .filter(|e| e.prime == p)
            .filter_map(|e| e.parameter_for(k).map(|l| (e, l)))
            .collect()
    }
}

/// Built-in ledger lookup.
pub fn ledger_lookup(p: u64, k: i64) -> Vec<TorsionLedgerEntry> {
    TorsionLedger::builtin()
        .lookup(p, k)
        .into_iter()
        .map(|(e, _)| e.clone())
        .collect()
}
