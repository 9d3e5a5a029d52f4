//! Machine-readable reports behind the command-line interface.
//!
//! Every command produces a [`Report`]: a command echo, the input parameters,
//! a deterministic JSON payload, and a list of verdicts for commands that
//! have a defined expected value. Timing is deliberately kept out of the
//! payload so identical inputs give byte-identical output.

use crate::cosets::{classify_two_sided, coset_extremes, enumerate_pi, CosetMatrix, SchurKind};
use crate::hecke::{AlgebraKind, CellSide, Schur, ORACLE_MAX_D};
use crate::signed_perm::{parse_word, word_to_string, GroupKind, SignedPerm};
use crate::symbols::{approx_eq_d, sym, ContentCmp, SymbolD};
use crate::tableaux::{count_semistandard_domino, Partition};
use crate::{Error, Result};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Default cap on the rank of oracle-backed computations.
pub const DEFAULT_MAX_D: usize = 3;

/// Resolves the oracle rank cap: an explicit override wins, then the
/// `CELLKIT_MAX_D` environment variable, then the default of 3. Values
/// outside `1..=4` are rejected.
pub fn effective_max_d(override_: Option<usize>) -> Result<usize> {
    let v = match override_ {
        Some(v) => v,
        None => match std::env::var("CELLKIT_MAX_D") {
            Ok(s) => s.trim().parse::<usize>().map_err(|_| {
                Error::Usage(format!("CELLKIT_MAX_D must be an integer, got {s:?}"))
            })?,
            Err(_) => DEFAULT_MAX_D,
        },
    };
    if !(1..=ORACLE_MAX_D).contains(&v) {
        return Err(Error::Usage(format!(
            "oracle rank cap must lie in 1..={ORACLE_MAX_D}, got {v}"
        )));
    }
    Ok(v)
}

fn check_oracle_rank(d: usize, max_d: usize) -> Result<()> {
    if d > max_d {
        return Err(Error::Bound(format!(
            "oracle computations are capped at d = {max_d} \
             (raise CELLKIT_MAX_D or pass --max-rank-override, at most {ORACLE_MAX_D}); got d = {d}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Verdict {
        Verdict { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub payload: Value,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    /// True when every verdict passed; vacuously true for report-only output.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "payload": self.payload,
            "verdicts": self
                .verdicts
                .iter()
                .map(|v| json!({"name": v.name, "pass": v.pass, "detail": v.detail}))
                .collect::<Vec<_>>(),
            "pass": self.passed(),
        })
    }

    /// Flat table rendering; only defined for classification payloads.
    pub fn to_csv(&self) -> Result<String> {
        let Some(classes) = self.payload.get("classes").and_then(Value::as_array) else {
            return Err(Error::Usage(
                "csv output is only available for classification commands".into(),
            ));
        };
        let mut out = String::from("key,size,members\n");
        for c in classes {
            let key = match c.get("key") {
                Some(Value::Array(parts)) => parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                _ => String::new(),
            };
            let members: Vec<String> = c["members"]
                .as_array()
                .unwrap_or(&Vec::new())
                .iter()
                .map(|m| m.to_string())
                .collect();
            out.push_str(&format!("{key},{},{}\n", members.len(), members.join(" ")));
        }
        Ok(out)
    }
}

fn kind_str(kind: SchurKind) -> &'static str {
    match kind {
        SchurKind::J => "j",
        SchurKind::I => "i",
    }
}

fn matrix_json(m: &CosetMatrix) -> Value {
    json!({
        "kind": kind_str(m.kind()),
        "n": m.n(),
        "d": m.rank(),
        "rows": m.rows(),
    })
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn symbol_json(s: &SymbolD) -> Value {
    json!({
        "top": s.top(),
        "bottom": s.bottom(),
        "twin": s.twin().map(|t| format!("{t:?}")),
    })
}

fn matrix_from_value(kind: SchurKind, rows: &Value) -> Result<CosetMatrix> {
    let rows: Vec<Vec<u32>> = serde_json::from_value(rows.clone())
        .map_err(|e| Error::Parse(format!("bad matrix rows in fixture data: {e}")))?;
    CosetMatrix::new(kind, rows)
}

fn fixtures() -> Value {
    serde_json::from_str(include_str!("../data/examples.json"))
        .expect("embedded fixture data is valid JSON")
}

pub fn cmd_enumerate(n: usize, d: usize, kind: AlgebraKind) -> Result<Report> {
    let mats = enumerate_pi(n, d, kind.matrix_kind())?;
    let mut rows = Vec::with_capacity(mats.len());
    for (i, m) in mats.iter().enumerate() {
        let y = m.y()?;
        rows.push(json!({
            "index": i,
            "matrix": matrix_json(m),
            "ro": m.ro().entries(),
            "co": m.co().entries(),
            "y_window": y.window(),
            "y_word": word_to_string(&y.reduced_word()),
            "length": m.length()?,
            "sigma": partition_json(&m.sigma()?),
        }));
    }
    Ok(Report {
        command: "enumerate".into(),
        params: json!({"n": n, "d": d, "kind": kind.to_string()}),
        payload: json!({"count": mats.len(), "rows": rows}),
        verdicts: Vec::new(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Combinatorial,
    Oracle,
    Both,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Combinatorial => "combinatorial",
            Method::Oracle => "oracle",
            Method::Both => "both",
        })
    }
}

pub fn cmd_cells(
    n: usize,
    d: usize,
    kind: AlgebraKind,
    method: Method,
    max_d: usize,
) -> Result<Report> {
    if kind == AlgebraKind::ITilde && method != Method::Oracle {
        return Err(Error::Usage(
            "the partition-keyed classification is not defined for kind i-tilde; \
             use --method oracle"
                .into(),
        ));
    }
    let mats = enumerate_pi(n, d, kind.matrix_kind())?;
    let index_of = |m: &CosetMatrix| -> usize {
        mats.iter().position(|x| x == m).expect("classified matrix comes from the same family")
    };

    let combinatorial: Option<Vec<(Partition, Vec<usize>)>> = if method != Method::Oracle {
        let classes = classify_two_sided(n, d, kind.matrix_kind())?;
        Some(
            classes
                .into_iter()
                .map(|(key, members)| {
                    let mut idx: Vec<usize> = members.iter().map(&index_of).collect();
                    idx.sort_unstable();
                    (key, idx)
                })
                .collect(),
        )
    } else {
        None
    };

    let oracle = if method != Method::Combinatorial {
        check_oracle_rank(d, max_d)?;
        let schur = Schur::new(n, d, kind)?;
        Some(schur.cells()?)
    } else {
        None
    };

    let mut verdicts = Vec::new();
    let mut payload = serde_json::Map::new();
    payload.insert("count".into(), json!(mats.len()));

    // A single canonical class table: keyed by special partition when the
    // combinatorial classification applies, otherwise the oracle blocks.
    let classes_json: Vec<Value> = if let Some(classes) = &combinatorial {
        classes
            .iter()
            .map(|(key, members)| {
                json!({"key": partition_json(key), "size": members.len(), "members": members})
            })
            .collect()
    } else {
        let cells = oracle.as_ref().unwrap();
        cells
            .blocks(CellSide::TwoSided)
            .iter()
            .map(|block| {
                let members: Vec<u32> = block.clone();
                json!({"key": Value::Null, "size": members.len(), "members": members})
            })
            .collect()
    };
    payload.insert("classes".into(), Value::Array(classes_json));

    if let Some(cells) = &oracle {
        payload.insert(
            "oracle".into(),
            json!({
                "two_sided": cells.blocks(CellSide::TwoSided),
                "left": cells.blocks(CellSide::Left),
                "right": cells.blocks(CellSide::Right),
            }),
        );
    }

    if method == Method::Both {
        let classes = combinatorial.as_ref().unwrap();
        let cells = oracle.as_ref().unwrap();
        let mut a: Vec<Vec<usize>> = classes.iter().map(|(_, m)| m.clone()).collect();
        a.sort();
        let mut b: Vec<Vec<usize>> = cells
            .blocks(CellSide::TwoSided)
            .iter()
            .map(|block| block.iter().map(|&i| i as usize).collect())
            .collect();
        b.sort();
        let agree = a == b;
        verdicts.push(Verdict::new(
            "agreement",
            agree,
            format!(
                "combinatorial classes: {}, oracle two-sided cells: {}",
                a.len(),
                b.len()
            ),
        ));
    }

    Ok(Report {
        command: "cells".into(),
        params: json!({
            "n": n, "d": d, "kind": kind.to_string(), "method": method.to_string(),
        }),
        payload: Value::Object(payload),
        verdicts,
    })
}

fn verify_ex_3_11(fx: &Value, verdicts: &mut Vec<Verdict>) -> Result<Value> {
    let n = fx["n"].as_u64().unwrap() as usize;
    let d = fx["d"].as_u64().unwrap() as usize;
    let entries = fx["entries"].as_array().unwrap();
    let mats = enumerate_pi(n, d, SchurKind::J)?;
    verdicts.push(Verdict::new(
        "count",
        mats.len() == entries.len(),
        format!("enumerated {} of {}", mats.len(), entries.len()),
    ));
    for (k, entry) in entries.iter().enumerate() {
        let m = matrix_from_value(SchurKind::J, &entry["rows"])?;
        let label = format!("A{}", k + 1);
        let want_y = SignedPerm::from_word(d, &parse_word(entry["y_word"].as_str().unwrap())?)?;
        let got_y = m.y()?;
        verdicts.push(Verdict::new(
            format!("{label} y"),
            got_y == want_y,
            format!("computed {got_y}, expected {want_y}"),
        ));
        let want_len = entry["length"].as_u64().unwrap() as u32;
        let got_len = m.length()?;
        verdicts.push(Verdict::new(
            format!("{label} length"),
            got_len == want_len,
            format!("computed {got_len}, expected {want_len}"),
        ));
        if !mats.contains(&m) {
            verdicts.push(Verdict::new(format!("{label} present"), false, "missing"));
        }
    }
    Ok(json!({"count": entries.len()}))
}

fn verify_ex_3_14(fx: &Value, verdicts: &mut Vec<Verdict>) -> Result<Value> {
    let m = matrix_from_value(SchurKind::J, &fx["rows"])?;
    let want_pseudo: Vec<Vec<Vec<i32>>> = serde_json::from_value(fx["pseudo"].clone())
        .map_err(|e| Error::Parse(format!("bad pseudo-matrix fixture: {e}")))?;
    let got_pseudo = m.pseudo_matrix();
    verdicts.push(Verdict::new(
        "pseudo-matrix",
        got_pseudo == want_pseudo,
        format!("{got_pseudo:?}"),
    ));
    let want_window: Vec<i32> = serde_json::from_value(fx["y_window"].clone())
        .map_err(|e| Error::Parse(format!("bad window fixture: {e}")))?;
    let y = m.y()?;
    verdicts.push(Verdict::new(
        "y",
        y.window() == want_window.as_slice(),
        format!("computed {y}"),
    ));
    let sigma = m.sigma()?;
    let oracle = m.sigma_chain_oracle()?;
    let want_sigma: Vec<u32> = serde_json::from_value(fx["sigma"].clone())
        .map_err(|e| Error::Parse(format!("bad sigma fixture: {e}")))?;
    let want_s: Vec<u64> = serde_json::from_value(fx["s_values"].clone())
        .map_err(|e| Error::Parse(format!("bad s-values fixture: {e}")))?;
    let mut acc = 0u64;
    for (k, part) in oracle.parts().iter().enumerate() {
        acc += u64::from(*part);
        if let Some(&want) = want_s.get(k) {
            verdicts.push(Verdict::new(
                format!("s{}", k + 1),
                acc == want,
                format!("computed {acc}, expected {want}"),
            ));
        }
    }
    verdicts.push(Verdict::new(
        "sigma",
        sigma.parts() == want_sigma,
        format!("computed {sigma}"),
    ));
    verdicts.push(Verdict::new(
        "sigma agreement",
        sigma == oracle,
        format!("closed form {sigma}, chain oracle {oracle}"),
    ));
    Ok(json!({
        "sigma": partition_json(&sigma),
        "y_window": y.window(),
    }))
}

fn verify_ex_3_18(fx: &Value, all: &Value, verdicts: &mut Vec<Verdict>) -> Result<Value> {
    let n = fx["n"].as_u64().unwrap() as usize;
    let d = fx["d"].as_u64().unwrap() as usize;
    let base = all["ex-3.11"]["entries"].as_array().unwrap();
    let classes = classify_two_sided(n, d, SchurKind::J)?;
    let want = fx["classes"].as_array().unwrap();
    verdicts.push(Verdict::new(
        "class count",
        classes.len() == want.len(),
        format!("computed {}, expected {}", classes.len(), want.len()),
    ));
    for wc in want {
        let key_parts: Vec<u32> = serde_json::from_value(wc["key"].clone())
            .map_err(|e| Error::Parse(format!("bad class key fixture: {e}")))?;
        let key = Partition::new(key_parts)?;
        let mut expect = Vec::new();
        for idx in wc["members"].as_array().unwrap() {
            let entry = &base[idx.as_u64().unwrap() as usize];
            expect.push(matrix_from_value(SchurKind::J, &entry["rows"])?);
        }
        expect.sort();
        let got = classes.iter().find(|(k, _)| *k == key).map(|(_, m)| {
            let mut m = m.clone();
            m.sort();
            m
        });
        verdicts.push(Verdict::new(
            format!("class {key} members"),
            got.as_deref() == Some(expect.as_slice()),
            format!("expected {} members", expect.len()),
        ));
    }
    Ok(json!({"classes": classes.len()}))
}

fn verify_ex_5_9(fx: &Value, verdicts: &mut Vec<Verdict>) -> Result<Value> {
    let entries = fx["entries"].as_array().unwrap();
    for (k, entry) in entries.iter().enumerate() {
        let label = format!("B{}", k + 1);
        let m = matrix_from_value(SchurKind::I, &entry["rows"])?;
        let d = entry["d"].as_u64().unwrap() as usize;
        let want_y = SignedPerm::from_word(d, &parse_word(entry["y_word"].as_str().unwrap())?)?;
        let want_min =
            SignedPerm::from_word(d, &parse_word(entry["min_word"].as_str().unwrap())?)?;
        let y = m.y()?;
        verdicts.push(Verdict::new(
            format!("{label} y"),
            y == want_y,
            format!("computed {y}, expected {want_y}"),
        ));
        let (min, max) = coset_extremes(&m.ro(), &m.co(), &y)?;
        verdicts.push(Verdict::new(
            format!("{label} min"),
            min == want_min,
            format!("computed {min}, expected {want_min}"),
        ));
        verdicts.push(Verdict::new(
            format!("{label} max"),
            max == y,
            format!("computed {max}"),
        ));
        verdicts.push(Verdict::new(
            format!("{label} length"),
            m.length()? == y.length(),
            format!("closed form {}, word length {}", m.length()?, y.length()),
        ));
    }
    Ok(json!({"count": entries.len()}))
}

fn verify_ex_6_14(fx: &Value, verdicts: &mut Vec<Verdict>) -> Result<Value> {
    let identities = fx["identities"].as_array().unwrap();
    let mut rows = Vec::new();
    for (k, entry) in identities.iter().enumerate() {
        let d = entry["d"].as_u64().unwrap() as usize;
        let left = SignedPerm::from_word(d, &parse_word(entry["left"].as_str().unwrap())?)?;
        let right = SignedPerm::from_word(d, &parse_word(entry["right"].as_str().unwrap())?)?;
        let sl = sym(&left)?;
        let sr = sym(&right)?;
        verdicts.push(Verdict::new(
            format!("identity {}", k + 1),
            sl == sr,
            format!("sym({left}) = {sl}, sym({right}) = {sr}"),
        ));
        if let Some(symbol) = entry.get("symbol").filter(|v| !v.is_null()) {
            let top: Vec<u32> = serde_json::from_value(symbol["top"].clone())
                .map_err(|e| Error::Parse(format!("bad symbol fixture: {e}")))?;
            let bottom: Vec<u32> = serde_json::from_value(symbol["bottom"].clone())
                .map_err(|e| Error::Parse(format!("bad symbol fixture: {e}")))?;
            let want = SymbolD::new(top, bottom, None)?;
            verdicts.push(Verdict::new(
                format!("identity {} value", k + 1),
                sl == want,
                format!("computed {sl}, expected {want}"),
            ));
        }
        rows.push(json!({
            "left": entry["left"],
            "right": entry["right"],
            "sym": symbol_json(&sl),
        }));
    }
    Ok(json!({"identities": rows}))
}

pub fn cmd_verify(id: &str) -> Result<Report> {
    let all = fixtures();
    let ids: Vec<&str> = match id {
        "all" => vec!["ex-3.11", "ex-3.14", "ex-3.18", "ex-5.9", "ex-6.14"],
        known if all.get(known).is_some() => vec![known],
        other => {
            return Err(Error::Usage(format!(
                "unknown example id {other:?}; known ids: ex-3.11, ex-3.14, ex-3.18, ex-5.9, ex-6.14, all"
            )))
        }
    };
    let mut verdicts = Vec::new();
    let mut payload = serde_json::Map::new();
    for one in ids {
        let fx = &all[one];
        let mut local = Vec::new();
        let part = match one {
            "ex-3.11" => verify_ex_3_11(fx, &mut local)?,
            "ex-3.14" => verify_ex_3_14(fx, &mut local)?,
            "ex-3.18" => verify_ex_3_18(fx, &all, &mut local)?,
            "ex-5.9" => verify_ex_5_9(fx, &mut local)?,
            "ex-6.14" => verify_ex_6_14(fx, &mut local)?,
            _ => unreachable!(),
        };
        payload.insert(one.to_string(), part);
        if id == "all" {
            for v in &mut local {
                v.name = format!("{one} {}", v.name);
            }
        }
        verdicts.extend(local);
    }
    Ok(Report {
        command: "verify".into(),
        params: json!({"id": id}),
        payload: Value::Object(payload),
        verdicts,
    })
}

fn scan_sign_twist(d: usize) -> Result<(usize, Vec<Value>, Vec<Value>)> {
    let elems = SignedPerm::enumerate(d, GroupKind::D)?;
    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();
    for w in &elems {
        let tw = w.left_mul_gen(0);
        let a = sym(w)?;
        let b = sym(&tw)?;
        let equal = approx_eq_d(&a, &b, ContentCmp::Multiset, true) && a.class_key() == b.class_key();
        let row = json!({
            "w_window": w.window(),
            "w_word": word_to_string(&w.reduced_word()),
            "sym": symbol_json(&a),
            "sym_twisted": symbol_json(&b),
            "equal": equal,
        });
        if !equal {
            counterexamples.push(row.clone());
        }
        rows.push(row);
    }
    Ok((elems.len(), rows, counterexamples))
}

fn left_cell_table(
    n: usize,
    d: usize,
    kind: AlgebraKind,
    max_entry: u32,
    max_d: usize,
) -> Result<Value> {
    check_oracle_rank(d, max_d)?;
    let schur = Schur::new(n, d, kind)?;
    let cells = schur.cells()?;
    let classes = classify_two_sided(n, d, kind.matrix_kind())?;
    let mut member_class: BTreeMap<usize, Partition> = BTreeMap::new();
    for (key, members) in &classes {
        for m in members {
            let idx = schur.matrix_index(m).expect("classified matrix is in the family");
            member_class.insert(idx, key.clone());
        }
    }
    let mut left_counts: BTreeMap<Partition, usize> = BTreeMap::new();
    for block in cells.blocks(CellSide::Left) {
        let key = member_class[&(block[0] as usize)].clone();
        *left_counts.entry(key).or_insert(0) += 1;
    }
    let mut rows = Vec::new();
    for (key, _) in &classes {
        let predicted = count_semistandard_domino(key, max_entry);
        let observed = left_counts.get(key).copied().unwrap_or(0) as u64;
        rows.push(json!({
            "key": partition_json(key),
            "domino_count": predicted,
            "oracle_left_cells": observed,
            "agree": predicted == observed,
        }));
    }
    Ok(json!({"rows": rows, "note": "report only; no assertion"}))
}

pub fn cmd_conjecture(
    id: &str,
    n: Option<usize>,
    d: usize,
    max_d: usize,
) -> Result<Report> {
    let (payload, params) = match id {
        "c6.13" => {
            let (checks, rows, counterexamples) = scan_sign_twist(d)?;
            let mut payload = serde_json::Map::new();
            payload.insert("checks".into(), json!(checks));
            payload.insert("counterexamples".into(), Value::Array(counterexamples));
            if d <= 2 {
                payload.insert("identities".into(), Value::Array(rows));
            }
            (Value::Object(payload), json!({"id": id, "d": d}))
        }
        "c3.19" => {
            let n = n.ok_or_else(|| Error::Usage("c3.19 needs --n".into()))?;
            let r = (n - 1) / 2;
            let payload = left_cell_table(n, d, AlgebraKind::J, r as u32 + 1, max_d)?;
            (payload, json!({"id": id, "n": n, "d": d}))
        }
        "c5.10" => {
            let n = n.ok_or_else(|| Error::Usage("c5.10 needs --n".into()))?;
            let r = n / 2;
            let payload = left_cell_table(n, d, AlgebraKind::I, r as u32, max_d)?;
            (payload, json!({"id": id, "n": n, "d": d}))
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown conjecture id {other:?}; known ids: c3.19, c5.10, c6.13"
            )))
        }
    };
    Ok(Report {
        command: "conjecture".into(),
        params,
        payload,
        // Conjectures are open; the scan reports but never fails.
        verdicts: Vec::new(),
    })
}

pub fn cmd_oracle_dump(
    n: Option<usize>,
    d: usize,
    kind: AlgebraKind,
    max_d: usize,
) -> Result<Report> {
    check_oracle_rank(d, max_d)?;
    let payload = match n {
        None => {
            let table = crate::hecke::GroupTable::new(d)?;
            let h = crate::hecke::Hecke::new(table, kind.weight(d))?;
            let all: Vec<u32> = (0..h.table().size() as u32).collect();
            let prods = h.c_product_table(&all);
            let name = |i: u32| word_to_string(h.table().word(i));
            let mut rows = Vec::new();
            for &x in &all {
                for &y in &all {
                    let mut terms = serde_json::Map::new();
                    for (&z, c) in &prods[x as usize][y as usize] {
                        terms.insert(name(z), json!(c.to_string()));
                    }
                    rows.push(json!({"x": name(x), "y": name(y), "terms": terms}));
                }
            }
            json!({"basis": "canonical", "size": all.len(), "rows": rows})
        }
        Some(n) => {
            let schur = Schur::new(n, d, kind)?;
            let m = schur.matrices().len();
            let mut rows = Vec::new();
            for a in 0..m {
                for b in 0..m {
                    let consts = schur.structure_constants(a, b)?;
                    if consts.is_empty() {
                        continue;
                    }
                    let mut terms = serde_json::Map::new();
                    for (c, g) in consts {
                        terms.insert(c.to_string(), json!(g.to_string()));
                    }
                    rows.push(json!({"a": a, "b": b, "terms": terms}));
                }
            }
            json!({"basis": "coset matrices", "size": m, "rows": rows})
        }
    };
    Ok(Report {
        command: "oracle-dump".into(),
        params: match n {
            Some(n) => json!({"n": n, "d": d, "kind": kind.to_string()}),
            None => json!({"d": d, "kind": kind.to_string()}),
        },
        payload,
        verdicts: Vec::new(),
    })
}
