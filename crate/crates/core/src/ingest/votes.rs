//! Votes-CSV ingestion: one competition season of co-voting data.
//!
//! Format (UTF-8, comma-separated, LF lines):
//!
//! ```text
//! #season,<name>
//! #players
//! <label>,<eliminated|finalist|winner>     one line per player, elimination
//! ...                                      order, winner last
//! #votes
//! <voter>,<target>                         one line per vote cast
//! ```
//!
//! Jury votes reverse polarity at the end-game and must not appear in the
//! votes section; the network models votes *against* players only.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::CompetitionNetwork;

/// One competition season: players in elimination order (winner last), the
/// finalists, the raw votes, and the co-voting network they induce.
#[derive(Debug, Clone, PartialEq)]
pub struct SeasonRecord {
    season_name: String,
    players: Vec<String>,
    finalists: BTreeSet<String>,
    votes: Vec<(String, String)>,
    network: CompetitionNetwork,
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(Error::EmptyLabel);
    }
    if label.starts_with('#') || label.chars().any(|c| c == ',' || c.is_control()) {
        return Err(Error::UnusableLabel(label.to_owned()));
    }
    Ok(())
}

impl SeasonRecord {
    /// Assembles and validates a season. `players` are in elimination order
    /// with the winner last; the winner is always counted among the
    /// finalists. The network has `A(u, v)` equal to the number of times `u`
    /// voted for `v`.
    pub fn new(
        season_name: impl Into<String>,
        players: Vec<String>,
        finalists: impl IntoIterator<Item = String>,
        votes: Vec<(String, String)>,
    ) -> Result<Self> {
        let season_name = season_name.into();
        if season_name.is_empty() {
            return Err(Error::InvalidSeason("season name must be non-empty".into()));
        }
        let winner = players
            .last()
            .ok_or_else(|| Error::InvalidSeason("season has no players".into()))?
            .clone();
        for label in &players {
            check_label(label)?;
        }
        let mut finalists: BTreeSet<String> = finalists.into_iter().collect();
        finalists.insert(winner);
        for finalist in &finalists {
            if !players.contains(finalist) {
                return Err(Error::InvalidSeason(format!(
                    "finalist {finalist:?} is not a player"
                )));
            }
        }
        let network = CompetitionNetwork::build(
            players.clone(),
            votes.iter().map(|(a, b)| (a.as_str(), b.as_str(), 1.0)),
        )?;
        Ok(Self {
            season_name,
            players,
            finalists,
            votes,
            network,
        })
    }

    pub fn season_name(&self) -> &str {
        &self.season_name
    }

    /// Players in elimination order; the winner is the last entry.
    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn winner(&self) -> &str {
        self.players.last().expect("season has players")
    }

    pub fn finalists(&self) -> &BTreeSet<String> {
        &self.finalists
    }

    pub fn votes(&self) -> &[(String, String)] {
        &self.votes
    }

    pub fn network(&self) -> &CompetitionNetwork {
        &self.network
    }
}

/// Parses a Votes-CSV document. Errors carry the 1-based line number of the
/// offending input line.
pub fn parse_votes_csv(input: &str) -> Result<SeasonRecord> {
    let mut lines = input.lines().enumerate();

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty input, expected '#season,<name>'"))?;
    let header = header.trim_end_matches('\r');
    let season_name = header
        .strip_prefix("#season,")
        .ok_or_else(|| Error::parse(lineno + 1, "expected '#season,<name>' header"))?;
    if season_name.is_empty() {
        return Err(Error::parse(lineno + 1, "season name must be non-empty"));
    }

    let (lineno, players_header) = lines
        .next()
        .ok_or_else(|| Error::parse(2, "expected '#players' section"))?;
    if players_header.trim_end_matches('\r') != "#players" {
        return Err(Error::parse(lineno + 1, "expected '#players' section"));
    }

    let mut players: Vec<String> = Vec::new();
    let mut finalists: Vec<String> = Vec::new();
    let mut winner: Option<(String, usize)> = None;
    let mut saw_votes_header = false;
    let mut last_line = 2;

    for (lineno, raw) in &mut lines {
        let line = raw.trim_end_matches('\r');
        last_line = lineno + 1;
        if line == "#votes" {
            saw_votes_header = true;
            break;
        }
        let (label, status) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(lineno + 1, "expected '<label>,<status>' player line"))?;
        check_label(label).map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
        if players.contains(&label.to_owned()) {
            return Err(Error::parse(lineno + 1, format!("duplicate player {label:?}")));
        }
        match status {
            "eliminated" => {}
            "finalist" => finalists.push(label.to_owned()),
            "winner" => {
                if let Some((ref prev, _)) = winner {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("second winner {label:?} (winner {prev:?} already declared)"),
                    ));
                }
                winner = Some((label.to_owned(), lineno + 1));
            }
            other => {
                return Err(Error::parse(
                    lineno + 1,
                    format!("unknown player status {other:?} (expected eliminated, finalist or winner)"),
                ))
            }
        }
        players.push(label.to_owned());
    }

    if !saw_votes_header {
        return Err(Error::parse(last_line, "missing '#votes' section"));
    }
    let (winner, winner_line) =
        winner.ok_or_else(|| Error::parse(last_line, "missing winner in '#players' section"))?;
    if players.last() != Some(&winner) {
        return Err(Error::parse(
            winner_line,
            format!("winner {winner:?} must be the last player (elimination order, winner last)"),
        ));
    }

    let mut votes: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in lines {
        let line = raw.trim_end_matches('\r');
        let (voter, target) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(lineno + 1, "expected '<voter>,<target>' vote line"))?;
        for side in [voter, target] {
            if !players.iter().any(|p| p == side) {
                return Err(Error::parse(lineno + 1, format!("unknown player {side:?}")));
            }
        }
        if voter == target {
            return Err(Error::parse(lineno + 1, format!("self-vote by {voter:?}")));
        }
        votes.push((voter.to_owned(), target.to_owned()));
    }

    SeasonRecord::new(season_name, players, finalists, votes)
}

/// Serializes a season back to the Votes-CSV format. `parse_votes_csv` on
/// the output reproduces the record exactly.
pub fn write_votes_csv(record: &SeasonRecord) -> String {
    let mut out = String::new();
    out.push_str("#season,");
    out.push_str(record.season_name());
    out.push_str("\n#players\n");
    let winner = record.winner();
    for player in record.players() {
        let status = if player == winner {
            "winner"
        } else if record.finalists().contains(player) {
            "finalist"
        } else {
            "eliminated"
        };
        out.push_str(player);
        out.push(',');
        out.push_str(status);
        out.push('\n');
    }
    out.push_str("#votes\n");
    for (voter, target) in record.votes() {
        out.push_str(voter);
        out.push(',');
        out.push_str(target);
        out.push('\n');
    }
    out
}
