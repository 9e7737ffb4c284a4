use serde_json::{Map, Number, Value};

/// Rounds `x` to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let rounded: f64 = format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x);
    // keep -0.0 out of the output
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Rounds every float in `value`, recursively. Integers are left alone.
pub fn round_value(value: Value, digits: usize) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().unwrap_or(0.0), digits);
            Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => {
            Value::Array(items.into_iter().map(|v| round_value(v, digits)).collect())
        }
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, round_value(v, digits)))
                .collect::<Map<_, _>>(),
        ),
        other => other,
    }
}
