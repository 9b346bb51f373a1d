//! Team files.
//!
//! Text format: a line `domain: p,q` followed by one bitstring per line in
//! domain order (`01` means p false, q true). A line `--` starts the next
//! team, so one file may hold several teams. Blank lines and lines starting
//! with `#` are ignored.
//!
//! JSON format: `{"domain":["p","q"],"teams":[["00","11"],[]]}`.
//!
//! A file whose first non-blank character is `{` is read as JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};
use teamlogic::{Domain, Team};

use crate::error::CliError;

/// The teams of one file, all over the same domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TeamFile {
    pub domain: Domain,
    pub teams: Vec<Team>,
}

#[derive(Serialize, Deserialize)]
struct JsonTeams {
    domain: Vec<String>,
    teams: Vec<Vec<String>>,
}

/// Reads a team file in either format.
pub fn read_team_file(path: &Path) -> Result<TeamFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    if text.trim_start().starts_with('{') {
        parse_json(&text).map_err(|e| match e {
            JsonError::Syntax(source) => CliError::Json {
                path: path.to_owned(),
                source,
            },
            JsonError::Logic(e) => CliError::TeamFile {
                path: path.to_owned(),
                line: 1,
                message: e.to_string(),
            },
        })
    } else {
        parse_text(&text).map_err(|(line, message)| CliError::TeamFile {
            path: path.to_owned(),
            line,
            message,
        })
    }
}

enum JsonError {
    Syntax(serde_json::Error),
    Logic(teamlogic::Error),
}

fn parse_json(text: &str) -> Result<TeamFile, JsonError> {
    let raw: JsonTeams = serde_json::from_str(text).map_err(JsonError::Syntax)?;
    let domain = Domain::new(raw.domain).map_err(JsonError::Logic)?;
    let teams = raw
        .teams
        .iter()
        .map(|rows| Team::from_bitstrings(domain.clone(), rows.iter().map(String::as_str)))
        .collect::<Result<_, _>>()
        .map_err(JsonError::Logic)?;
    Ok(TeamFile { domain, teams })
}

/// Parses the text format; errors carry a 1-based line number.
pub fn parse_text(text: &str) -> Result<TeamFile, (usize, String)> {
    let mut domain = None;
    let mut teams = Vec::new();
    let mut rows: Vec<(usize, &str)> = Vec::new();
    let mut finish = |domain: &Domain, rows: &mut Vec<(usize, &str)>| -> Result<(), (usize, String)> {
        let mut members = Vec::new();
        for &(line, row) in rows.iter() {
            members.push(domain.parse_bitstring(row).map_err(|e| (line, e.to_string()))?);
        }
        rows.clear();
        let team = Team::from_assignments(domain.clone(), members).map_err(|e| (0, e.to_string()))?;
        teams.push(team);
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match &domain {
            None => {
                let list = line
                    .strip_prefix("domain:")
                    .ok_or_else(|| (i + 1, "expected `domain: p,q`".to_string()))?;
                let props: Vec<&str> = list.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
                domain = Some(Domain::new(props).map_err(|e| (i + 1, e.to_string()))?);
            }
            Some(d) if line == "--" => finish(d, &mut rows)?,
            Some(_) => rows.push((i + 1, line)),
        }
    }
    let domain = domain.ok_or_else(|| (1, "missing `domain:` line".to_string()))?;
    finish(&domain, &mut rows)?;
    Ok(TeamFile { domain, teams })
}

/// Renders teams in the text format.
pub fn to_text(file: &TeamFile) -> String {
    let mut out = format!("domain: {}\n", file.domain.props().join(","));
    for (i, team) in file.teams.iter().enumerate() {
        if i > 0 {
            out.push_str("--\n");
        }
        for row in team.bitstrings() {
            out.push_str(&row);
            out.push('\n');
        }
    }
    out
}

/// Renders teams in the JSON format.
pub fn to_json(file: &TeamFile) -> String {
    let raw = JsonTeams {
        domain: file.domain.props().to_vec(),
        teams: file.teams.iter().map(Team::bitstrings).collect(),
    };
    serde_json::to_string(&raw).expect("team lists serialise")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let f = parse_text("# two teams\ndomain: p, q\n00\n11\n--\n\n01\n").unwrap();
        assert_eq!(f.domain.props(), ["p", "q"]);
        assert_eq!(f.teams.len(), 2);
        assert_eq!(f.teams[0].len(), 2);
        assert_eq!(parse_text(&to_text(&f)).unwrap(), f);
    }

    #[test]
    fn empty_team_and_separators() {
        let f = parse_text("domain: p\n").unwrap();
        assert_eq!(f.teams.len(), 1);
        assert!(f.teams[0].is_empty());
        let f = parse_text("domain: p\n--\n1\n").unwrap();
        assert!(f.teams[0].is_empty());
        assert_eq!(f.teams[1].bitstrings(), ["1"]);
    }

    #[test]
    fn json_round_trip() {
        let f = parse_json(r#"{"domain":["p","q"],"teams":[["00","11"],[]]}"#).ok().unwrap();
        assert_eq!(f.teams.len(), 2);
        assert!(f.teams[1].is_empty());
        assert_eq!(parse_json(&to_json(&f)).ok().unwrap(), f);
    }

    #[test]
    fn text_errors_report_lines() {
        assert_eq!(parse_text("p,q\n").unwrap_err().0, 1);
        assert_eq!(parse_text("domain: p,q\n00\n0x\n").unwrap_err().0, 3);
        assert_eq!(parse_text("domain: p,p\n").unwrap_err().0, 1);
        assert_eq!(parse_text("domain: p\n10\n").unwrap_err().0, 2);
        assert!(parse_text("").is_err());
    }
}
