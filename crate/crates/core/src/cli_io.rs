//! Built-in knots, descriptor parsing and JSON reports.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::covers::{branched_cover_order, prime_power_cover_screen};
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::lt_signature::{signature_profile, SignatureConfig};
use crate::obstruct::{inequality_report, signature_gds_bound, superslice_lower_bound};
use crate::parity::{arf, is_stably_doubly_slice};
use crate::seifert::{
    determinant, is_visibly_hyperbolic, KnotDescriptor, SeifertMatrix, HYPERBOLIC_SEARCH_MAX,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Names accepted by [`builtin`]; `trefoil` is the right-handed one.
pub const BUILTIN_NAMES: [&str; 6] = [
    "unknot",
    "trefoil",
    "right_trefoil",
    "left_trefoil",
    "figure_eight",
    "9_46",
];

struct Entry {
    seifert: [[i64; 2]; 2],
    alexander: [i64; 3],
    ribbon: bool,
    crossings: u32,
}

const RIGHT_TREFOIL: Entry = Entry {
    seifert: [[-1, 1], [0, -1]],
    alexander: [1, -1, 1],
    ribbon: false,
    crossings: 3,
};
const FIGURE_EIGHT: Entry = Entry {
    seifert: [[1, 1], [0, -1]],
    alexander: [1, -3, 1],
    ribbon: false,
    crossings: 4,
};
const NINE_46: Entry = Entry {
    seifert: [[0, 2], [1, 0]],
    alexander: [2, -5, 2],
    ribbon: true,
    crossings: 9,
};

fn load(name: &str, e: &Entry) -> KnotDescriptor {
    let v = SeifertMatrix::validate(e.seifert.iter().map(|r| r.to_vec()).collect())
        .expect("table matrices are valid");
    let k = KnotDescriptor::from_seifert(name, v)
        .with_ribbon(Some(e.ribbon))
        .with_crossing_number(Some(e.crossings));
    assert!(
        k.alexander_polynomial()
            .associates(&LaurentPoly::from_ints(&e.alexander)),
        "Alexander polynomial of {name} disagrees with the table"
    );
    k
}

/// A named knot from the built-in table, with its Alexander polynomial
/// re-verified.
pub fn builtin(name: &str) -> Result<KnotDescriptor> {
    Ok(match name {
        "unknot" => KnotDescriptor::unknot(),
        "trefoil" | "right_trefoil" => load(name, &RIGHT_TREFOIL),
        "left_trefoil" => {
            let mut k = load("right_trefoil", &RIGHT_TREFOIL).mirror()?;
            k.name = name.into();
            k
        }
        "figure_eight" => load(name, &FIGURE_EIGHT),
        "9_46" => load(name, &NINE_46),
        _ => return Err(Error::UnknownKnot(name.into())),
    })
}

/// Parses a descriptor from JSON. A bare JSON string names a built-in knot.
pub fn parse_descriptor(bytes: &[u8]) -> Result<KnotDescriptor> {
    let v: Value = serde_json::from_slice(bytes).map_err(|e| Error::Schema(e.to_string()))?;
    if let Value::String(name) = &v {
        return builtin(name);
    }
    serde_json::from_value(v).map_err(|e| Error::Schema(e.to_string()))
}

/// A built-in name, or a path to a JSON descriptor (`-` reads stdin).
pub fn resolve_knot(arg: &str) -> Result<KnotDescriptor> {
    if BUILTIN_NAMES.contains(&arg) {
        return builtin(arg);
    }
    let bytes = if arg == "-" {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)
            .map_err(|e| Error::Schema(e.to_string()))?;
        buf
    } else if Path::new(arg).is_file() {
        std::fs::read(arg).map_err(|e| Error::Schema(format!("{arg}: {e}")))?
    } else {
        return Err(Error::UnknownKnot(arg.into()));
    };
    parse_descriptor(&bytes)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub input_digest: String,
    pub sections: BTreeMap<String, Value>,
}

impl Report {
    /// `input` is hashed in serde_json's canonical form (sorted keys, no
    /// whitespace).
    pub fn new(input: &Value) -> Self {
        let canonical = serde_json::to_string(input).expect("values always serialize");
        let digest = Sha256::digest(canonical.as_bytes());
        Self {
            tool_version: TOOL_VERSION.into(),
            input_digest: digest.iter().map(|b| format!("{b:02x}")).collect(),
            sections: BTreeMap::new(),
        }
    }

    pub fn section(mut self, name: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("sections always serialize");
        self.sections.insert(name.into(), v);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Canonical input record for a knot-valued command.
pub fn knot_input(command: &str, k: &KnotDescriptor, params: Value) -> Value {
    json!({ "command": command, "knot": k, "params": params })
}

pub fn invariants_section(k: &KnotDescriptor, cfg: &SignatureConfig) -> Result<Value> {
    let module = k.alexander_module();
    let profile = signature_profile(k, cfg)?;
    let hyperbolic = match k.seifert() {
        Ok(v) if v.size() <= HYPERBOLIC_SEARCH_MAX => Some(is_visibly_hyperbolic(k)?),
        _ => None,
    };
    Ok(json!({
        "name": k.name,
        "alexander_polynomial": k.alexander_polynomial().to_string(),
        "determinant": determinant(k).to_string(),
        "genus_upper_bound": k.genus_upper_bound(),
        "module": {
            "free_rank": module.free_rank(),
            "invariant_factors": module.invariant_factors().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "min_generators": module.min_generators(),
        },
        "signature": profile,
        "signature_identically_zero": profile.is_identically_zero(),
        "rho0": profile.rho0,
        "arf": arf(k),
        "stably_doubly_slice": is_stably_doubly_slice(k),
        "visibly_hyperbolic": hyperbolic,
        "ribbon": k.ribbon,
    }))
}

pub fn bounds_section(k: &KnotDescriptor, b2: u64, cfg: &SignatureConfig) -> Result<Value> {
    Ok(json!({
        "inequalities": inequality_report(k, cfg)?,
        "signature_gds": signature_gds_bound(k, cfg)?,
        "superslice": superslice_lower_bound(k, b2)?,
    }))
}

/// Orders for every `2 ≤ n ≤ max_n` plus the prime-power screen.
pub fn covers_section(k: &KnotDescriptor, max_n: u64) -> Result<Value> {
    let orders = (2..=max_n)
        .map(|n| branched_cover_order(k, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "orders": orders,
        "prime_power_screen": prime_power_cover_screen(k, max_n)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_loads() {
        for name in BUILTIN_NAMES {
            let k = builtin(name).unwrap();
            assert_eq!(k.name, name);
        }
        let left = builtin("left_trefoil").unwrap();
        assert_eq!(
            left.seifert().unwrap().entries(),
            &[vec![1, 0], vec![-1, 1]]
        );
        assert!(matches!(builtin("8_20"), Err(Error::UnknownKnot(_))));
    }

    #[test]
    fn parsing() {
        let k = parse_descriptor(br#""9_46""#).unwrap();
        assert_eq!(k.seifert().unwrap().entries(), &[vec![0, 2], vec![1, 0]]);
        let e = parse_descriptor(br#"{"seifert": [[1]]}"#).unwrap_err();
        assert!(e.to_string().contains("even size"), "{e}");
        let e = parse_descriptor(br#"{"seifert": [[0, 1], [1, 0]]}"#).unwrap_err();
        assert!(e.to_string().contains("det(V - V^T)"), "{e}");
        assert!(parse_descriptor(b"{").is_err());
        assert!(parse_descriptor(br#"{"seifert": [[0,2],[1,0]], "colour": 1}"#).is_err());
    }

    #[test]
    fn surrogate_half_round_trips() {
        let phi = crate::exactalg::cyclotomic(30);
        let src = json!({
            "name": "R",
            "module_presentation": [[phi]],
            "signature_zero": true,
        });
        let k = parse_descriptor(src.to_string().as_bytes()).unwrap();
        assert!(k.is_surrogate());
        assert_eq!(k.alexander_polynomial(), phi);
        let again = parse_descriptor(serde_json::to_string(&k).unwrap().as_bytes()).unwrap();
        assert_eq!(again, k);
    }

    #[test]
    fn report_digest_is_stable() {
        let k = builtin("9_46").unwrap();
        let a = Report::new(&knot_input("invariants", &k, json!({})));
        let b = Report::new(&knot_input("invariants", &k, json!({})));
        assert_eq!(a, b);
        assert_eq!(a.input_digest.len(), 64);
        let c = Report::new(&knot_input(
            "invariants",
            &builtin("trefoil").unwrap(),
            json!({}),
        ));
        assert_ne!(a.input_digest, c.input_digest);
    }

    #[test]
    fn invariants_of_9_46() {
        let v = invariants_section(&builtin("9_46").unwrap(), &SignatureConfig::default()).unwrap();
        assert_eq!(v["alexander_polynomial"], "2t^2 - 5t + 2");
        assert_eq!(v["module"]["min_generators"], 1);
        assert_eq!(v["rho0"], json!({"exact": "0"}));
        assert_eq!(v["arf"], 0);
        assert_eq!(v["visibly_hyperbolic"]["hyperbolic"], true);
    }
}
