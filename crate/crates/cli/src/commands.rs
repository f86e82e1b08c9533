use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use periodic_core::bigint_serde::parse_decimal;
use periodic_core::{
    build_spectrum, characteristic_poly, coefficient_table_with_cap, cyclotomic_poly,
    finewilf_difference_gcd, finewilf_window, gcd_window, maximal_moduli_distinct,
    size_by_inclusion_exclusion, size_by_phi, window_class_check, AbelianGroup, CoefficientTable,
    Error, IntVector, ModInt, PeriodSystem, PeriodicMap, PositiveInt, ResidueSystem,
};
use serde::Serialize;
use serde_json::json;

use crate::{CoverArgs, ExtrapolateArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::TableTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn strings<T: ToString>(values: impl IntoIterator<Item = T>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

pub fn spectrum(periods: Vec<PositiveInt>) -> Result<String> {
    let ps = PeriodSystem::new(periods)?;
    let sp = build_spectrum(&ps);
    let enumerated = sp.len() as u128;
    let phi = size_by_phi(&ps);
    let ie = size_by_inclusion_exclusion(&ps).ok();
    let agree = enumerated == phi && ie.is_none_or(|v| v == enumerated);
    Ok(pretty(&json!({
        "periods": strings(ps.periods()),
        "N": sp.modulus().to_string(),
        "divisor_closure": strings(sp.divisor_closure()),
        "spectrum": sp.elements(),
        "size": {
            "enumeration": enumerated.to_string(),
            "phi": phi.to_string(),
            "inclusion_exclusion": ie.map(|v| v.to_string()),
            "agree": agree,
        },
        "bound": ps.size_bound().to_string(),
    })))
}

pub fn charpoly(periods: Vec<PositiveInt>) -> Result<String> {
    let ps = PeriodSystem::new(periods)?;
    let sp = build_spectrum(&ps);
    let p = characteristic_poly(&sp);
    let factors: Vec<_> = sp
        .divisor_closure()
        .iter()
        .map(|&d| json!({ "d": d.to_string(), "poly": cyclotomic_poly(d) }))
        .collect();
    Ok(pretty(&json!({
        "periods": strings(ps.periods()),
        "divisor_closure": strings(sp.divisor_closure()),
        "factors": factors,
        "charpoly": p,
        "degree": p.degree().unwrap_or(0).to_string(),
        "display": p.to_string(),
    })))
}

pub fn coeffs(periods: Vec<PositiveInt>, out: Option<&Path>, max_rows: usize) -> Result<String> {
    let ps = PeriodSystem::new(periods)?;
    let table = coefficient_table_with_cap(&ps, max_rows)?;
    let doc = table.to_json();
    match out {
        None => Ok(doc),
        Some(path) => {
            std::fs::write(path, format!("{doc}\n"))?;
            Ok(pretty(&json!({
                "written": path.display().to_string(),
                "N": table.modulus().to_string(),
                "l": table.width().to_string(),
            })))
        }
    }
}

pub fn load_table(path: &Path) -> Result<CoefficientTable> {
    let text = std::fs::read_to_string(path)?;
    Ok(CoefficientTable::from_json(&text)?)
}

fn parse_int(s: &str) -> Result<BigInt> {
    parse_decimal(s.trim()).ok_or_else(|| CliError::Usage(format!("invalid integer {s:?}")))
}

fn run_extrapolation<G: AbelianGroup>(
    table: &CoefficientTable,
    values: Vec<G>,
    x: &BigInt,
) -> Result<String> {
    Ok(periodic_core::extrapolate(table, &values, x)?.to_string())
}

pub fn extrapolate_value(args: &ExtrapolateArgs) -> Result<(String, String)> {
    let table = match &args.table {
        Some(path) => load_table(path)?,
        None => {
            coefficient_table_with_cap(&PeriodSystem::new(args.periods.clone())?, args.max_rows)?
        }
    };
    if args.initial.len() != table.width() {
        return Err(Error::LengthMismatch {
            expected: table.width(),
            found: args.initial.len(),
        }
        .into());
    }
    let group = &args.group;
    if let Some(m) = group.modulus {
        let values = args
            .initial
            .iter()
            .map(|s| parse_int(s).map(|v| ModInt::new(&v, m)))
            .collect::<Result<Vec<_>>>()?;
        Ok((
            format!("mod {m}"),
            run_extrapolation(&table, values, &args.at)?,
        ))
    } else if let Some(dim) = group.dim {
        let values = args
            .initial
            .iter()
            .map(|s| {
                let inner = s.trim();
                let inner = inner
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .unwrap_or(inner);
                let comps = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(parse_int)
                        .collect::<Result<Vec<_>>>()?
                };
                if comps.len() != dim {
                    return Err(CliError::Usage(format!(
                        "vector {s:?} has {} components, expected {dim}",
                        comps.len()
                    )));
                }
                Ok(IntVector(comps))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((
            format!("vec {dim}"),
            run_extrapolation(&table, values, &args.at)?,
        ))
    } else {
        let values = args
            .initial
            .iter()
            .map(|s| parse_int(s))
            .collect::<Result<Vec<_>>>()?;
        Ok((
            "int".to_string(),
            run_extrapolation(&table, values, &args.at)?,
        ))
    }
}

pub fn extrapolate(args: ExtrapolateArgs) -> Result<String> {
    let (group, value) = extrapolate_value(&args)?;
    Ok(pretty(&json!({
        "group": group,
        "x": args.at.to_string(),
        "value": value,
    })))
}

fn read_system(args: &CoverArgs) -> Result<ResidueSystem> {
    let mut text = String::new();
    match args.input.as_deref() {
        Some(path) if path == Path::new("-") => {
            std::io::stdin().read_to_string(&mut text)?;
        }
        Some(path) => text = std::fs::read_to_string(path)?,
        None if args.classes.is_empty() => {
            return Err(CliError::Usage("no residue system given".into()));
        }
        None => {}
    }
    if !args.classes.is_empty() {
        if !text.is_empty() {
            return Err(CliError::Usage(
                "give either an input file or --class, not both".into(),
            ));
        }
        text = args.classes.join("\n");
    }
    Ok(ResidueSystem::parse(&text)?)
}

pub fn cover(args: CoverArgs) -> Result<String> {
    let sys = read_system(&args)?;
    let (m, a) = if args.odd {
        (PositiveInt::new(2).expect("2 > 0"), BigInt::from(1))
    } else {
        (args.modulus, args.residue.clone())
    };
    let check = window_class_check(&sys, m, &a, &args.start);
    let odd = if m.get() == 2 && a == BigInt::from(1) {
        check.holds
    } else {
        periodic_core::odd_cover_check(&sys, &args.start)
    };
    let distinct = maximal_moduli_distinct(&sys);
    let mut report = json!({
        "classes": strings(sys.classes()),
        "window_len": sys.window_len().to_string(),
        "start": args.start.to_string(),
        "window": strings(&check.window),
        "class_check": {
            "modulus": m.to_string(),
            "residue": a.to_string(),
            "holds": check.holds,
        },
        "odd_cover": odd,
        "maximal_moduli_distinct": distinct,
    });
    if let Some(ab) = &args.gcd_window {
        let (ga, gb) = (&ab[0], &ab[1]);
        let values = periodic_core::covering::gcd_window_values(&sys, ga, gb);
        let g = gcd_window(&sys, ga, gb);
        report["gcd_window"] = json!({
            "a": ga.to_string(),
            "b": gb.to_string(),
            "values": strings(&values),
            "gcd": g.to_string(),
            "degenerate": g == 0u32.into(),
            "hypothesis": sys.len() > 1 && distinct,
        });
    }
    Ok(pretty(&report))
}

fn parse_sequence(text: &str) -> Result<PeriodicMap<BigInt>> {
    let (values, declared) = match text.split_once('|') {
        Some((v, p)) => (v, Some(p)),
        None => (text, None),
    };
    let values = values
        .split(',')
        .map(parse_int)
        .collect::<Result<Vec<_>>>()?;
    if let Some(p) = declared {
        let p: PositiveInt = p.parse()?;
        if p.get() != values.len() as u64 {
            return Err(CliError::Usage(format!(
                "sequence {text:?} has {} values but declares period {p}",
                values.len()
            )));
        }
    }
    Ok(PeriodicMap::new(values)?)
}

pub fn finewilf(g: &str, h: &str) -> Result<String> {
    let (g, h) = (parse_sequence(g)?, parse_sequence(h)?);
    let window = finewilf_window(g.period(), h.period());
    let d = finewilf_difference_gcd(&g, &h);
    Ok(pretty(&json!({
        "m": g.period().to_string(),
        "n": h.period().to_string(),
        "window": window.to_string(),
        "gcd": d.to_string(),
        "identical": d == 0u32.into(),
    })))
}
