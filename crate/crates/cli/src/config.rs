//! Flat `key = value` configuration; `#` starts a comment.

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub shape: Option<(usize, usize)>,
    pub truncation_depth: Option<usize>,
    pub seed: Option<u64>,
    pub max_degree: Option<u32>,
}

pub fn parse_config(text: &str) -> Result<Config, String> {
    let mut c = Config::default();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
        let (k, v) = (k.trim(), v.trim());
        let bad = || format!("line {}: bad value {v:?} for {k}", n + 1);
        match k {
            "shape" => c.shape = Some(crate::args::parse_pair(v).map_err(|_| bad())?),
            "truncation_depth" => c.truncation_depth = Some(v.parse().map_err(|_| bad())?),
            "seed" => c.seed = Some(v.parse().map_err(|_| bad())?),
            "max_degree" => c.max_degree = Some(v.parse().map_err(|_| bad())?),
            _ => return Err(format!("line {}: unknown key {k:?}", n + 1)),
        }
    }
    Ok(c)
}
