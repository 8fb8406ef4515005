//! Browser demo bindings. Each operation takes plain strings and returns a
//! JSON string (an object with an "error" key on bad input), so the same
//! functions run under wasm-bindgen in the page and in native tests.

use chaincount::bijection::{ballot_endpoint_for, phi, theta};
use chaincount::chains::{chain_polynomial, is_prime, ExponentTuple};
use chaincount::exactmath::BigNat;
use chaincount::weights::{upper_arch_count, word_weight_exponent};
use chaincount::words::{SegmentKind, TailSide, Word};
use chaincount::LatticePoint;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn error_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

/// Successive lattice points visited by the word, starting at the origin.
fn path_points(word: &Word) -> Vec<[usize; 2]> {
    let mut points = vec![[0usize, 0usize]];
    let mut x = 0usize;
    let mut y = 0usize;
    for &symbol in word.symbols() {
        match symbol {
            chaincount::Symbol::E => x += 1,
            chaincount::Symbol::N => y += 1,
        }
        points.push([x, y]);
    }
    points
}

fn segment_exponent(kind: SegmentKind, word: &Word, tail_side: TailSide) -> usize {
    let (e, n) = word.counts();
    match kind {
        SegmentKind::LowerArch => e,
        SegmentKind::UpperArch => e - 1,
        SegmentKind::Tail => match tail_side {
            TailSide::Superdiagonal => e,
            TailSide::Subdiagonal => n,
            TailSide::Empty => 0,
        },
    }
}

/// Arch decomposition, weight exponents and drawing data for a word.
#[wasm_bindgen]
pub fn analyze_word(word: &str) -> String {
    let word: Word = match word.parse() {
        Ok(word) => word,
        Err(e) => return error_json(e),
    };
    let decomposition = word.decompose();
    let mut segments = Vec::new();
    let mut offset = 0usize;
    for segment in &decomposition.segments {
        let exponent = segment_exponent(segment.kind, &segment.word, decomposition.tail_side);
        segments.push(json!({
            "kind": format!("{:?}", segment.kind),
            "word": segment.word.to_string(),
            "start": offset,
            "len": segment.word.len(),
            "exponent": exponent,
        }));
        offset += segment.word.len();
    }
    let endpoint = word.endpoint();
    json!({
        "word": word.to_string(),
        "points": path_points(&word),
        "endpoint": [endpoint.x, endpoint.y],
        "class": format!("{:?}", word.classify()),
        "segments": segments,
        "tail_side": format!("{:?}", decomposition.tail_side),
        "total_exponent": word_weight_exponent(&word),
        "upper_arch_count": decomposition.upper_arch_count(),
    })
    .to_string()
}

/// Forward bijection: the ballot image of a word, with drawing data for
/// both paths.
#[wasm_bindgen]
pub fn ballot_image(word: &str) -> String {
    let word: Word = match word.parse() {
        Ok(word) => word,
        Err(e) => return error_json(e),
    };
    let k = upper_arch_count(&word);
    let source = word.endpoint();
    let image = phi(&word);
    let target = match ballot_endpoint_for(source, k) {
        Ok(point) => point,
        Err(e) => return error_json(e),
    };
    json!({
        "input": word.to_string(),
        "input_points": path_points(&word),
        "k": k,
        "source": [source.x, source.y],
        "output": image.to_string(),
        "output_points": path_points(&image),
        "target": [target.x, target.y],
    })
    .to_string()
}

/// Inverse bijection: reconstruct the arch word from a ballot word, a
/// target endpoint and an arch count.
#[wasm_bindgen]
pub fn ballot_preimage(word: &str, x: u32, y: u32, k: u32) -> String {
    let word: Word = match word.parse() {
        Ok(word) => word,
        Err(e) => return error_json(e),
    };
    let target = LatticePoint {
        x: x as usize,
        y: y as usize,
    };
    let preimage = match theta(&word, target, k as usize) {
        Ok(preimage) => preimage,
        Err(e) => return error_json(e),
    };
    json!({
        "input": word.to_string(),
        "input_points": path_points(&word),
        "k": k,
        "target": [target.x, target.y],
        "output": preimage.to_string(),
        "output_points": path_points(&preimage),
    })
    .to_string()
}

/// Chain-count polynomial for a comma-separated exponent tuple, with
/// evaluations at small bases.
#[wasm_bindgen]
pub fn chain_polynomial_info(alphas: &str) -> String {
    let parsed: Result<Vec<u32>, _> = alphas
        .split(',')
        .map(|part| part.trim().parse::<u32>())
        .collect();
    let entries = match parsed {
        Ok(entries) if !entries.is_empty() && entries.iter().all(|&a| a > 0) => entries,
        Ok(_) => return error_json("exponents must be positive integers"),
        Err(_) => return error_json(format!("cannot parse '{alphas}' as a tuple like 1,2,3")),
    };
    if entries.len() > 6 || entries.iter().map(|&a| a as u64).sum::<u64>() > 40 {
        return error_json("tuple too large for the demo (at most 6 entries summing to 40)");
    }
    let tuple = match ExponentTuple::new(entries) {
        Ok(tuple) => tuple,
        Err(e) => return error_json(e),
    };
    let poly = chain_polynomial(&tuple);
    let coefficients: Vec<Value> = poly
        .dense_coeffs()
        .iter()
        .map(|c| Value::String(c.to_string()))
        .collect();
    let evaluations: Vec<Value> = [2u64, 3, 4, 5, 7]
        .iter()
        .map(|&p| {
            json!({
                "p": p,
                "prime": is_prime(p),
                "value": poly.eval(&BigNat::from(p)).to_string(),
            })
        })
        .collect();
    json!({
        "alphas": tuple.entries(),
        "rendered": poly.render("p"),
        "coefficients": coefficients,
        "degree": poly.degree(),
        "coefficient_sum": poly.coefficient_sum().to_string(),
        "evaluations": evaluations,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).expect("valid json")
    }

    #[test]
    fn analyze_reports_segments_and_points() {
        let v = parse(analyze_word("NEN"));
        assert_eq!(v["endpoint"], json!([1, 2]));
        assert_eq!(v["points"], json!([[0, 0], [0, 1], [1, 1], [1, 2]]));
        assert_eq!(v["segments"].as_array().unwrap().len(), 2);
        assert_eq!(v["segments"][0]["kind"], "UpperArch");
        assert_eq!(v["total_exponent"], 0);

        let v = parse(analyze_word("NXN"));
        assert!(v["error"].as_str().unwrap().contains("invalid symbol"));
    }

    #[test]
    fn bijection_round_trip_through_json() {
        let forward = parse(ballot_image("NEN"));
        assert_eq!(forward["output"], "NNN");
        assert_eq!(forward["target"], json!([0, 3]));
        let back = parse(ballot_preimage("NNN", 1, 2, 1));
        assert_eq!(back["output"], "NEN");
        let bad = parse(ballot_preimage("NNN", 1, 2, 0));
        assert!(bad["error"].as_str().unwrap().contains("expected"));
    }

    #[test]
    fn polynomial_info() {
        let v = parse(chain_polynomial_info("1,2"));
        assert_eq!(v["rendered"], "2p + 1");
        assert_eq!(v["coefficients"], json!(["1", "2"]));
        assert_eq!(v["evaluations"][0]["value"], "5");
        assert_eq!(v["evaluations"][2]["prime"], false);
        let v = parse(chain_polynomial_info("0,1"));
        assert!(v["error"].as_str().is_some());
        let v = parse(chain_polynomial_info("nope"));
        assert!(v["error"].as_str().is_some());
    }
}
