use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use bdbelief::conditioning::{condition_bel_lower, condition_pl_lower};
use bdbelief::credal::{bayes_update_measure, extreme_points, sample_credal, update_credal};
use bdbelief::json::{parse_mass, parse_model, LoadedModel, MassFile, ModelFile};
use bdbelief::measures::{
    belief_from_plausibility, check_belief_axioms, check_plausibility_axioms, AxiomReport,
};
use bdbelief::tolerance::epsilon;
use bdbelief::{parse, Error, Formula, StateSet, Universe};

use crate::{CliError, Command};

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, value: &Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(Error::from)? + "\n";
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> CliResult<LoadedModel> {
    Ok(parse_model(&read(path)?)?)
}

fn formula(text: &str) -> CliResult<Formula> {
    Ok(parse(text)?)
}

fn ids(universe: &Universe, set: StateSet) -> Vec<&str> {
    universe.ids(set)
}

fn report(r: AxiomReport) -> Value {
    match r {
        AxiomReport::Pass => json!({"pass": true}),
        AxiomReport::Fail(v) => json!({"pass": false, "violation": v.to_string()}),
    }
}

pub fn run(command: Command) -> CliResult<Value> {
    match command {
        Command::Eval { query, state } => {
            let model = load(&query.model)?;
            let f = formula(&query.formula)?;
            let states: Vec<String> = match state {
                Some(s) => vec![s],
                None => model.bd.universe().states().to_vec(),
            };
            let mut values = Map::new();
            for s in states {
                let v = model.bd.eval4(&s, &f)?;
                values.insert(s, json!(v.symbol()));
            }
            Ok(json!({"formula": f.to_string(), "values": values}))
        }
        Command::Ext(query) => {
            let model = load(&query.model)?;
            let f = formula(&query.formula)?;
            let (pos, neg) = model.bd.extensions(&f)?;
            let u = model.bd.universe();
            Ok(json!({"formula": f.to_string(), "pos": ids(u, pos), "neg": ids(u, neg)}))
        }
        Command::Bel(query) => {
            let ds = load(&query.model)?.ds()?;
            let f = formula(&query.formula)?;
            Ok(json!({"bel_pos": ds.bel_pos(&f)?, "bel_neg": ds.bel_neg(&f)?}))
        }
        Command::Pl(query) => {
            let dspl = load(&query.model)?.dspl()?;
            let f = formula(&query.formula)?;
            Ok(json!({"pl_pos": dspl.pl_pos(&f)?, "pl_neg": dspl.pl_neg(&f)?}))
        }
        Command::Prob(query) => {
            let prob = load(&query.model)?.probabilistic()?;
            let f = formula(&query.formula)?;
            Ok(json!({"prob": prob.prob(&f)?}))
        }
        Command::Update {
            model,
            on,
            method,
            output,
        } => {
            let loaded = load(&model)?;
            let f = formula(&on)?;
            let file = if loaded.pl.is_some() {
                let updated = loaded.dspl()?.update(&f, method)?;
                ModelFile::from_parts(
                    updated.bd(),
                    Some(updated.bel()),
                    Some(updated.pl()),
                    loaded.mu.as_ref(),
                )?
            } else {
                let updated = loaded.ds()?.update(&f, method)?;
                ModelFile::from_parts(updated.bd(), Some(updated.bel()), None, loaded.mu.as_ref())?
            };
            let value = serde_json::to_value(&file).map_err(Error::from)?;
            match output {
                Some(path) => {
                    write(&path, &value)?;
                    Ok(json!({"written": path, "on": f.to_string(), "method": method.to_string()}))
                }
                None => Ok(value),
            }
        }
        Command::Combine { m1, m2, output } => {
            let a = parse_mass(&read(&m1)?)?;
            let b = parse_mass(&read(&m2)?)?;
            let combined = bdbelief::conditioning::ds_combine(&a, &b)?;
            let value =
                serde_json::to_value(MassFile::from_mass(&combined)).map_err(Error::from)?;
            match output {
                Some(path) => {
                    write(&path, &value)?;
                    Ok(json!({"written": path}))
                }
                None => Ok(value),
            }
        }
        Command::Check { model, kmax } => check(&load(&model)?, kmax),
        Command::Oracle {
            model,
            on,
            samples,
            seed,
        } => oracle(&load(&model)?, &formula(&on)?, samples, seed),
    }
}

fn check(model: &LoadedModel, kmax: usize) -> CliResult<Value> {
    let mut out = Map::new();
    let universe = model.bd.universe();
    if let Some(bel) = &model.bel {
        out.insert(
            "bel".into(),
            report(check_belief_axioms(bel.values(), kmax)),
        );
        let dspl = model.dspl()?;
        let pl = dspl.pl();
        let source = if model.pl.is_some() {
            "independent"
        } else {
            "associated"
        };
        let mut pl_report = report(check_plausibility_axioms(pl.values(), kmax));
        pl_report["source"] = json!(source);
        out.insert("pl".into(), pl_report);
        let witness = universe
            .full()
            .subsets()
            .find(|&x| bel.value(x) > pl.value(x) + epsilon());
        out.insert(
            "bel_le_pl".into(),
            match witness {
                None => json!({"holds": true}),
                Some(x) => json!({
                    "holds": false, "set": ids(universe, x),
                    "bel": bel.value(x), "pl": pl.value(x)
                }),
            },
        );
    }
    if let Some(mu) = &model.mu {
        let table: Vec<f64> = universe.full().subsets().map(|x| mu.measure(x)).collect();
        out.insert("mu".into(), report(check_belief_axioms(&table, kmax)));
    }
    if out.is_empty() {
        return Err(Error::InvalidModel("the model carries no measures to check".into()).into());
    }
    Ok(Value::Object(out))
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn oracle(model: &LoadedModel, on: &Formula, samples: usize, seed: u64) -> CliResult<Value> {
    let dspl = model.dspl()?;
    let bel = dspl.bel();
    let universe = model.bd.universe();
    let given = model.bd.positive_extension(on)?;
    let tolerance = epsilon();

    let lower = condition_bel_lower(bel, given)?;
    let upper = condition_pl_lower(&dspl.ds().associated_pl(), given)?;
    let vertices = extreme_points(bel)?;
    let updated = update_credal(&vertices, given)?;
    let dev_bel = max_dev(lower.values(), &updated.lower_table()?);
    let dev_pl = max_dev(upper.values(), &updated.upper_table()?);

    let mut conditioned = 0;
    let mut violations = 0;
    for mu in sample_credal(bel, samples, seed)?.generators() {
        let Ok(mu_b) = bayes_update_measure(mu, given) else {
            continue;
        };
        conditioned += 1;
        let outside = universe.full().subsets().any(|x| {
            let v = mu_b.measure(x);
            v < lower.value(x) - tolerance || v > upper.value(x) + tolerance
        });
        violations += outside as usize;
    }

    let mut out = json!({
        "on": on.to_string(),
        "given": ids(universe, given),
        "extreme_points": vertices.len(),
        "conditioned_extreme_points": updated.len(),
        "max_dev_bel": dev_bel,
        "max_dev_pl": dev_pl,
        "samples": samples,
        "conditioned_samples": conditioned,
        "sample_violations": violations,
    });
    let mut pass = dev_bel <= tolerance && dev_pl <= tolerance && violations == 0;
    if let Some(pl) = &model.pl {
        // an independent Pl bounds the core of its own associated belief
        let core = update_credal(&extreme_points(&belief_from_plausibility(pl))?, given)?;
        let dev = max_dev(
            condition_pl_lower(pl, given)?.values(),
            &core.upper_table()?,
        );
        out["max_dev_independent_pl"] = json!(dev);
        pass &= dev <= tolerance;
    }
    out["pass"] = json!(pass);
    Ok(out)
}
