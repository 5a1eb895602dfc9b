//! JSON wire formats: decoding input files into core types and encoding
//! exact results.
//!
//! Integers may be written as decimal strings (arbitrary precision) or as
//! plain JSON numbers; rationals as `"p/q"` strings.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use commensura_core::abelian::{AbHom, FgAbGroup};
use commensura_core::corr::Correspondence;
use commensura_core::finring::FiniteRing;
use commensura_core::linalg::{IntMatrix, Integer, RatMatrix, Rational};
use commensura_core::order::{FiniteGroup, FiniteModule, OrderLattice, ZOrder};

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn integer(&self) -> Result<Integer, CliError> {
        match self {
            Num::Int(v) => Ok(Integer::from(*v)),
            Num::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("not an integer: {s:?}"))),
        }
    }

    fn rational(&self) -> Result<Rational, CliError> {
        match self {
            Num::Text(s) if s.contains('/') => {
                let (p, q) = s.split_once('/').expect("checked");
                let parse = |t: &str| -> Result<Integer, CliError> {
                    t.trim().parse().map_err(|_| CliError::Input(format!("not a rational: {s:?}")))
                };
                let q = parse(q)?;
                if q == Integer::from(0) {
                    return Err(CliError::Input(format!("zero denominator in {s:?}")));
                }
                Ok(Rational::new(parse(p)?, q))
            }
            _ => Ok(Rational::from_integer(self.integer()?)),
        }
    }
}

fn integers(v: &[Num]) -> Result<Vec<Integer>, CliError> {
    v.iter().map(Num::integer).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Num>,
}

impl MatrixJson {
    fn int(&self) -> Result<IntMatrix, CliError> {
        IntMatrix::new(self.rows, self.cols, integers(&self.entries)?).map_err(|e| CliError::Input(e.to_string()))
    }

    fn rat(&self) -> Result<RatMatrix, CliError> {
        let data = self.entries.iter().map(Num::rational).collect::<Result<_, _>>()?;
        RatMatrix::new(self.rows, self.cols, data).map_err(|e| CliError::Input(e.to_string()))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    rank: usize,
    #[serde(default)]
    torsion: Vec<Num>,
}

impl GroupJson {
    /// Any list of cyclic orders is accepted and brought into
    /// invariant-factor form.
    fn decode(&self) -> Result<FgAbGroup, CliError> {
        let orders = integers(&self.torsion)?;
        let mut small = Vec::with_capacity(orders.len());
        for d in &orders {
            let d = u64::try_from(d)
                .ok()
                .filter(|&d| d >= 1)
                .ok_or_else(|| CliError::Input(format!("torsion order {d} must be a positive machine integer")))?;
            small.push(d);
        }
        Ok(FgAbGroup::from_cyclic_orders(self.rank, &small))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteGroupJson {
    order: usize,
    table: Vec<Vec<usize>>,
    generators: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OrderJson {
    GroupRing { group_ring: FiniteGroupJson },
    Explicit { zrank: usize, structure: Vec<Num>, unity: Vec<Num> },
}

impl OrderJson {
    fn decode(&self) -> Result<ZOrder, CliError> {
        match self {
            OrderJson::GroupRing { group_ring: g } => {
                if g.table.len() != g.order {
                    return Err(CliError::Input(format!("group table has {} rows, order is {}", g.table.len(), g.order)));
                }
                let group = FiniteGroup::new(g.table.clone(), g.generators.clone())?;
                Ok(ZOrder::group_ring(&group))
            }
            OrderJson::Explicit { zrank, structure, unity } => {
                Ok(ZOrder::new(*zrank, integers(structure)?, integers(unity)?)?)
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeJson {
    order: OrderJson,
    zrank: usize,
    action: Vec<MatrixJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleJson {
    #[serde(default)]
    order: Option<OrderJson>,
    grp: GroupJson,
    #[serde(default)]
    action: Option<Vec<MatrixJson>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HomJson {
    src: GroupJson,
    dst: GroupJson,
    mat: MatrixJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CorrespondenceJson {
    apex: GroupJson,
    left: HomJson,
    right: HomJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingJson {
    add: GroupJson,
    mult: Vec<Num>,
    unity: Vec<Num>,
}

fn read(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Either a finitely generated abelian group or a finite module.
pub enum Object {
    Group(FgAbGroup),
    Module(FiniteModule),
}

pub fn read_object(path: &Path) -> Result<Object, CliError> {
    let v = read(path)?;
    if v.get("grp").is_some() {
        Ok(Object::Module(decode_module(parse(path, v)?)?))
    } else {
        Ok(Object::Group(parse::<GroupJson>(path, v)?.decode()?))
    }
}

/// A finite module; without `"order"` the module is over `Z` acting
/// trivially.
fn decode_module(m: ModuleJson) -> Result<FiniteModule, CliError> {
    let grp = m.grp.decode()?;
    match (m.order, m.action) {
        (None, None) => Ok(FiniteModule::trivial_action(&grp)?),
        (Some(order), Some(action)) => {
            let action = action.iter().map(MatrixJson::int).collect::<Result<_, _>>()?;
            Ok(FiniteModule::new(order.decode()?, grp, action)?)
        }
        _ => Err(CliError::Input("a finite module needs both \"order\" and \"action\", or neither".into())),
    }
}

pub fn read_lattice(path: &Path) -> Result<OrderLattice, CliError> {
    let l: LatticeJson = parse(path, read(path)?)?;
    let action = l.action.iter().map(MatrixJson::int).collect::<Result<_, _>>()?;
    Ok(OrderLattice::new(l.order.decode()?, l.zrank, action)?)
}

pub fn read_rat_matrix(path: &Path) -> Result<RatMatrix, CliError> {
    parse::<MatrixJson>(path, read(path)?)?.rat()
}

fn decode_hom(h: &HomJson) -> Result<AbHom, CliError> {
    Ok(AbHom::new(h.src.decode()?, h.dst.decode()?, h.mat.int()?)?)
}

pub fn read_correspondence(path: &Path) -> Result<Correspondence<FgAbGroup, AbHom>, CliError> {
    let c: CorrespondenceJson = parse(path, read(path)?)?;
    let apex = c.apex.decode()?;
    let (left, right) = (decode_hom(&c.left)?, decode_hom(&c.right)?);
    if left.src() != &apex || right.src() != &apex {
        return Err(CliError::Input("both legs must start at the apex".into()));
    }
    Ok(Correspondence::new(apex, left, right))
}

pub fn read_ring(path: &Path) -> Result<FiniteRing, CliError> {
    let r: RingJson = parse(path, read(path)?)?;
    let add = r.add.decode()?;
    Ok(FiniteRing::new(add, integers(&r.mult)?, integers(&r.unity)?)?)
}

// ---------------------------------------------------------------------------
// Encoding

pub fn integer(x: &Integer) -> Value {
    Value::String(x.to_string())
}

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &[Integer]) -> Value {
    Value::Array(v.iter().map(integer).collect())
}

pub fn group(g: &FgAbGroup) -> Value {
    json!({ "rank": g.rank(), "torsion": vector(g.torsion()) })
}

pub fn matrix(m: &IntMatrix) -> Value {
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": vector(m.entries()) })
}

pub fn hom(h: &AbHom) -> Value {
    json!({ "src": group(h.src()), "dst": group(h.dst()), "mat": matrix(h.matrix()) })
}

pub fn correspondence(c: &Correspondence<FgAbGroup, AbHom>) -> Value {
    json!({ "apex": group(&c.apex), "left": hom(&c.left), "right": hom(&c.right) })
}
