//! JSON wire formats shared by the library and the `blocklab` binary.
//!
//! * vector: `{"field":"gf3","coeffs":[[0,"1"],[1,"2"]]}`
//! * block sequence: `{"field":"gf2","entries":[<vector>,...]}`
//! * filter base: `{"field":"gf2","truncation":12,"min_tail":1,"generators":[<blockseq>,...]}`
//! * partition: `{"n":6,"cells":[[0,3],[1,2],[4,5]]}`
//! * transcript: `{"kind":"asymptotic","ambient":<blockseq>,"moves":[{"side":"I","n":1},{"side":"II","v":<vector>}]}`,
//!   with `{"side":"I","Y":<blockseq>}` for block moves, plus optional `"base"` and `"resigned"`.
//! * FIN sets and block sequences as plain arrays: `[0,2,5]`, `[[0,1],[3]]`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Field, Vector};
use crate::blockseq::{BlockSeq, Interval};
use crate::error::{Error, Result};
use crate::filters::{FilterBase, FinitePartition, IntervalSeq};
use crate::fin::{FinBlockSeq, FinSet};
use crate::games::{GameKind, Move, Side, Transcript};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorRepr {
    field: String,
    coeffs: Vec<(usize, String)>,
}

impl From<&Vector> for VectorRepr {
    fn from(v: &Vector) -> Self {
        VectorRepr {
            field: v.field().to_string(),
            coeffs: v
                .coeffs()
                .iter()
                .map(|&(i, c)| (i, c.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<VectorRepr> for Vector {
    type Error = Error;

    fn try_from(r: VectorRepr) -> Result<Vector> {
        let field: Field = r.field.parse()?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|(i, c)| Ok((*i, field.parse_scalar(c)?)))
            .collect::<Result<_>>()?;
        Vector::new(field, coeffs)
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VectorRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vector::try_from(VectorRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockSeqRepr {
    field: String,
    entries: Vec<Vector>,
}

impl TryFrom<BlockSeqRepr> for BlockSeq {
    type Error = Error;

    fn try_from(r: BlockSeqRepr) -> Result<BlockSeq> {
        BlockSeq::new(r.field.parse()?, r.entries)
    }
}

impl Serialize for BlockSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BlockSeqRepr {
            field: self.field().to_string(),
            entries: self.entries().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlockSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BlockSeq::try_from(BlockSeqRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FilterBaseRepr {
    field: String,
    truncation: usize,
    #[serde(default = "one")]
    min_tail: usize,
    generators: Vec<BlockSeq>,
}

fn one() -> usize {
    1
}

impl Serialize for FilterBase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FilterBaseRepr {
            field: self.field().to_string(),
            truncation: self.truncation(),
            min_tail: self.min_tail(),
            generators: self.generators().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FilterBase {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FilterBaseRepr::deserialize(d)?;
        let field: Field = r.field.parse().map_err(D::Error::custom)?;
        FilterBase::new(field, r.truncation, r.generators, r.min_tail).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionRepr {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Serialize for FinitePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionRepr {
            n: self.n(),
            cells: self.cells().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinitePartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PartitionRepr::deserialize(d)?;
        FinitePartition::new(r.n, r.cells).map_err(D::Error::custom)
    }
}

impl Serialize for FinSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FinSet::new(Vec::<usize>::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for FinBlockSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinBlockSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FinBlockSeq::new(Vec::<FinSet>::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.lo, self.hi).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (lo, hi) = <(usize, usize)>::deserialize(d)?;
        Interval::new(lo, hi).map_err(D::Error::custom)
    }
}

impl Serialize for IntervalSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntervalSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        IntervalSeq::new(Vec::<Interval>::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveRepr {
    side: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    n: Option<usize>,
    #[serde(rename = "Y", skip_serializing_if = "Option::is_none", default)]
    y: Option<BlockSeq>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    v: Option<Vector>,
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut r = MoveRepr {
            side: self.side().to_string(),
            n: None,
            y: None,
            v: None,
        };
        match self {
            Move::Natural(n) => r.n = Some(*n),
            Move::Block(y) => r.y = Some(y.clone()),
            Move::Vector(v) => r.v = Some(v.clone()),
        }
        r.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MoveRepr::deserialize(d)?;
        let m = match (r.side.as_str(), r.n, r.y, r.v) {
            ("I", Some(n), None, None) => Move::Natural(n),
            ("I", None, Some(y), None) => Move::Block(y),
            ("II", None, None, Some(v)) => Move::Vector(v),
            (side, ..) => {
                return Err(D::Error::custom(format!(
                    "malformed move for side {side:?}"
                )))
            }
        };
        Ok(m)
    }
}

fn side_name(s: Side) -> String {
    s.to_string()
}

fn parse_side(s: &str) -> Result<Side> {
    match s {
        "I" => Ok(Side::I),
        "II" => Ok(Side::II),
        _ => Err(Error::Parse(format!("unknown side {s:?}"))),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TranscriptRepr {
    kind: String,
    ambient: BlockSeq,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    base: Option<FilterBase>,
    moves: Vec<Move>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    resigned: Option<String>,
}

impl Serialize for Transcript {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TranscriptRepr {
            kind: self.kind().name().to_string(),
            ambient: self.ambient().clone(),
            base: self.base().cloned(),
            moves: self.moves().to_vec(),
            resigned: self.resigned().map(side_name),
        }
        .serialize(s)
    }
}

/// Parsing does not validate the moves, so that a tampered transcript can
/// still be loaded and replayed to find the first illegal move.
impl<'de> Deserialize<'de> for Transcript {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TranscriptRepr::deserialize(d)?;
        let build = || -> Result<Transcript> {
            let kind = GameKind::parse(&r.kind)?;
            let resigned = r.resigned.as_deref().map(parse_side).transpose()?;
            Transcript::unchecked(
                kind,
                r.ambient.clone(),
                r.base.clone(),
                r.moves.clone(),
                resigned,
            )
        };
        build().map_err(D::Error::custom)
    }
}

/// Parses any wire type from a JSON string, mapping failures to
/// [`Error::Parse`].
pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Canonical compact JSON for any wire type.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("wire types always serialise")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{play, CanonicalII, ConstNatural};

    #[test]
    fn vector_literal() {
        let f = Field::gf3();
        let v = Vector::ints(f, &[(0, 1), (1, 2)]).unwrap();
        let s = to_json(&v);
        assert_eq!(s, r#"{"field":"gf3","coeffs":[[0,"1"],[1,"2"]]}"#);
        assert_eq!(from_json::<Vector>(&s).unwrap(), v);
        assert!(from_json::<Vector>(r#"{"field":"gf3","coeffs":[[0,"3"]]}"#).is_err());
        assert!(from_json::<Vector>(r#"{"field":"gf3","coeffs":[]}"#).is_err());
        let q = Field::rationals(2).unwrap();
        let w = Vector::new(q, vec![(1, q.fraction(-1, 2).unwrap())]).unwrap();
        assert_eq!(to_json(&w), r#"{"field":"q2","coeffs":[[1,"-1/2"]]}"#);
        assert_eq!(from_json::<Vector>(&to_json(&w)).unwrap(), w);
    }

    #[test]
    fn blockseq_and_base_roundtrip() {
        let f = Field::gf2();
        let x = BlockSeq::unit(f, 0..3);
        assert_eq!(from_json::<BlockSeq>(&to_json(&x)).unwrap(), x);
        let bad = r#"{"field":"gf2","entries":[{"field":"gf2","coeffs":[[1,"1"]]},{"field":"gf2","coeffs":[[0,"1"]]}]}"#;
        assert!(from_json::<BlockSeq>(bad).is_err());
        let b = FilterBase::new(f, 4, vec![x], 2).unwrap();
        assert_eq!(from_json::<FilterBase>(&to_json(&b)).unwrap(), b);
        let p: FinitePartition = from_json(r#"{"n":6,"cells":[[0,3],[1,2],[4,5]]}"#).unwrap();
        assert_eq!(p.cells().len(), 3);
        let a: FinBlockSeq = from_json("[[0,1],[3]]").unwrap();
        assert_eq!(to_json(&a), "[[0,1],[3]]");
    }

    #[test]
    fn transcript_roundtrip() {
        let f = Field::gf2();
        let start = Transcript::new(GameKind::Asymptotic, BlockSeq::unit(f, 0..6), None).unwrap();
        let t = play(&start, &ConstNatural(1), &CanonicalII, 2).unwrap();
        let s = to_json(&t);
        assert!(s.starts_with(r#"{"kind":"asymptotic","ambient":"#));
        assert!(s.contains(r#"{"side":"I","n":1}"#));
        assert_eq!(from_json::<Transcript>(&s).unwrap(), t);
    }
}
