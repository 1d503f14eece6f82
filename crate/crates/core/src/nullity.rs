//! Nullity vectors: the ordered vanishing pattern of a concomitant battery.

use std::fmt;

/// Ordered boolean pattern recording which concomitants vanish, together with
/// the named schema saying which concomitant each slot holds. An entry is
/// `true` when the concomitant is nonzero (printed as 1) and `false` when it
/// vanishes exactly (printed as 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullityVector {
    names: &'static [&'static str],
    bits: Vec<bool>,
}

impl NullityVector {
    pub fn new(names: &'static [&'static str], bits: Vec<bool>) -> Self {
        assert_eq!(names.len(), bits.len(), "schema and pattern must align");
        NullityVector { names, bits }
    }

    pub fn names(&self) -> &'static [&'static str] {
        self.names
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn as_u8(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| b as u8).collect()
    }

    /// Pattern from a compact 0/1 string, for table literals.
    pub fn from_pattern(names: &'static [&'static str], pattern: &str) -> Self {
        let bits: Vec<bool> = pattern
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => false,
                '1' => true,
                other => panic!("invalid pattern char {other}"),
            })
            .collect();
        NullityVector::new(names, bits)
    }
}

impl fmt::Display for NullityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .bits
            .iter()
            .map(|&b| if b { "1".into() } else { "0".to_string() })
            .collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl serde::Serialize for NullityVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("NullityVector", 2)?;
        s.serialize_field("schema", self.names)?;
        s.serialize_field("values", &self.as_u8())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NAMES: &[&str] = &["B_x", "B_y", "B_z", "C", "Delta"];

    #[test]
    fn pattern_roundtrip() {
        let v = NullityVector::from_pattern(NAMES, "1,1,1,1,0");
        assert_eq!(v.to_string(), "<1,1,1,1,0>");
        assert_eq!(v.as_u8(), vec![1, 1, 1, 1, 0]);
        assert_eq!(v, NullityVector::new(NAMES, vec![true, true, true, true, false]));
    }
}
