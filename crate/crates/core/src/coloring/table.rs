use crate::fp::{assignment_count, decode_key, encode_key, PrimeModulus};
use crate::graph::{Color, Vertex};
use crate::{Error, Result};
use std::collections::HashMap;

/// Colors for an ordered vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    vertices: Vec<Vertex>,
    colors: Vec<Color>,
}

impl Assignment {
    pub fn new(vertices: Vec<Vertex>, colors: Vec<Color>) -> Result<Self> {
        if vertices.len() != colors.len() {
            return Err(Error::Dimension(format!("{} vertices but {} colors", vertices.len(), colors.len())));
        }
        if colors.contains(&0) {
            return Err(Error::InvalidLists("colors start at 1".into()));
        }
        Ok(Assignment { vertices, colors })
    }

    pub fn from_key(vertices: Vec<Vertex>, key: u64, q: u32) -> Self {
        let colors = decode_key(key, vertices.len(), q);
        Assignment { vertices, colors }
    }

    pub fn key(&self, q: u32) -> u64 {
        encode_key(&self.colors, q)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_of(&self, v: Vertex) -> Option<Color> {
        self.vertices.iter().position(|&u| u == v).map(|i| self.colors[i])
    }
}

/// Residues indexed by assignment keys over `domain`. Absent keys are zero
/// and zero values are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTable {
    domain: Vec<Vertex>,
    q: u32,
    modulus: PrimeModulus,
    entries: HashMap<u64, u64>,
}

impl SparseTable {
    pub fn new(domain: Vec<Vertex>, q: u32, modulus: PrimeModulus) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidLists("q must be positive".into()));
        }
        if assignment_count(domain.len(), q).is_none() {
            return Err(Error::Capacity(format!("{q}^{} table keys overflow 64 bits", domain.len())));
        }
        Ok(SparseTable { domain, q, modulus, entries: HashMap::new() })
    }

    /// Table from dense values indexed by key.
    pub fn from_dense(domain: Vec<Vertex>, q: u32, modulus: PrimeModulus, values: &[u64]) -> Result<Self> {
        let mut t = SparseTable::new(domain, q, modulus)?;
        if Some(values.len() as u64) != assignment_count(t.domain.len(), q) {
            return Err(Error::Dimension(format!("{} values for {q}^{} keys", values.len(), t.domain.len())));
        }
        for (k, &v) in values.iter().enumerate() {
            t.set(k as u64, v);
        }
        Ok(t)
    }

    pub(crate) fn from_map(domain: Vec<Vertex>, q: u32, modulus: PrimeModulus, mut entries: HashMap<u64, u64>) -> Self {
        entries.retain(|_, v| *v != 0);
        SparseTable { domain, q, modulus, entries }
    }

    pub fn domain(&self) -> &[Vertex] {
        &self.domain
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn get(&self, key: u64) -> u64 {
        self.entries.get(&key).copied().unwrap_or(0)
    }

    pub fn set(&mut self, key: u64, value: u64) {
        let value = self.modulus.reduce(value);
        if value == 0 {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn add(&mut self, key: u64, value: u64) {
        let cur = self.get(key);
        self.set(key, self.modulus.add(cur, self.modulus.reduce(value)));
    }

    /// Number of stored (nonzero) entries.
    pub fn support(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stored entries in ascending key order.
    pub fn entries(&self) -> Vec<(u64, u64)> {
        let mut v: Vec<_> = self.entries.iter().map(|(&k, &v)| (k, v)).collect();
        v.sort_unstable();
        v
    }

    pub fn sum(&self) -> u64 {
        self.entries.values().fold(0, |acc, &v| self.modulus.add(acc, v))
    }

    /// Dense vector over all `q^|domain|` keys.
    pub fn to_dense(&self) -> Result<Vec<u64>> {
        let len = assignment_count(self.domain.len(), self.q)
            .filter(|&l| l <= crate::fp::MAX_SIDE_ASSIGNMENTS)
            .ok_or_else(|| Error::Capacity(format!("dense table of {}^{} entries", self.q, self.domain.len())))?;
        let mut out = vec![0; len as usize];
        for (&k, &v) in &self.entries {
            out[k as usize] = v;
        }
        Ok(out)
    }
}
