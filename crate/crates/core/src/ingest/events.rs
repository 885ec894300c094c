//! Events-CSV ingestion: conflict events between actors.
//!
//! Header `actor_a,actor_b,directed,count`, one row per event or per
//! aggregated (pair, direction). The initiator of most conflict events is
//! unknown, so an undirected row contributes its count to both directions;
//! a directed row (the civilian-target convention) contributes to
//! `A(actor_a, actor_b)` only.

use crate::error::{Error, Result};
use crate::graph::CompetitionNetwork;

pub const EVENTS_CSV_HEADER: &str = "actor_a,actor_b,directed,count";

/// One conflict-event aggregate between two actors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRecord {
    pub actor_a: String,
    pub actor_b: String,
    /// True when the edge runs `actor_a -> actor_b` only.
    pub directed: bool,
    pub count: u64,
}

impl EventRecord {
    pub fn new(
        actor_a: impl Into<String>,
        actor_b: impl Into<String>,
        directed: bool,
        count: u64,
    ) -> Result<Self> {
        let (actor_a, actor_b) = (actor_a.into(), actor_b.into());
        if actor_a.is_empty() || actor_b.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if actor_a == actor_b {
            return Err(Error::SelfLoop(actor_a));
        }
        if count < 1 {
            return Err(Error::InvalidConfig("event count must be at least 1".into()));
        }
        Ok(Self {
            actor_a,
            actor_b,
            directed,
            count,
        })
    }
}

/// Builds a network over the actors named by `records`, in order of first
/// appearance. Undirected records become two reciprocal directed edges of
/// equal weight.
pub fn network_from_events(records: &[EventRecord]) -> Result<CompetitionNetwork> {
    let mut actors: Vec<&str> = Vec::new();
    for record in records {
        for actor in [record.actor_a.as_str(), record.actor_b.as_str()] {
            if !actors.contains(&actor) {
                actors.push(actor);
            }
        }
    }
    let mut edges: Vec<(&str, &str, f64)> = Vec::new();
    for record in records {
        let w = record.count as f64;
        edges.push((&record.actor_a, &record.actor_b, w));
        if !record.directed {
            edges.push((&record.actor_b, &record.actor_a, w));
        }
    }
    CompetitionNetwork::build(actors, edges)
}

/// Parses an Events-CSV document into a competition network. Errors carry
/// the 1-based line number of the offending row.
pub fn parse_events_csv(input: &str) -> Result<CompetitionNetwork> {
    let mut lines = input.lines().enumerate();
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("empty input, expected '{EVENTS_CSV_HEADER}'")))?;
    if header.trim_end_matches('\r').trim() != EVENTS_CSV_HEADER {
        return Err(Error::parse(
            lineno + 1,
            format!("expected header '{EVENTS_CSV_HEADER}'"),
        ));
    }

    let mut records: Vec<EventRecord> = Vec::new();
    for (lineno, raw) in lines {
        let line = raw.trim_end_matches('\r');
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(Error::parse(
                lineno + 1,
                format!("expected 4 comma-separated fields, got {}", fields.len()),
            ));
        }
        let directed = match fields[2] {
            "true" => true,
            "false" => false,
            other => {
                return Err(Error::parse(
                    lineno + 1,
                    format!("directed must be 'true' or 'false', got {other:?}"),
                ))
            }
        };
        let count: u64 = fields[3].parse().map_err(|_| {
            Error::parse(lineno + 1, format!("count must be a positive integer, got {:?}", fields[3]))
        })?;
        let record = EventRecord::new(fields[0], fields[1], directed, count)
            .map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
        records.push(record);
    }

    network_from_events(&records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undirected_rows_become_reciprocal_edges() {
        let net = parse_events_csv("actor_a,actor_b,directed,count\nx,y,false,3\n").unwrap();
        let id = |l: &str| net.node_by_label(l).unwrap();
        assert_eq!(net.weight(id("x"), id("y")), 3.0);
        assert_eq!(net.weight(id("y"), id("x")), 3.0);
    }

    #[test]
    fn directed_rows_stay_one_way() {
        let net =
            parse_events_csv("actor_a,actor_b,directed,count\nmilitia,civilians,true,2\n").unwrap();
        let id = |l: &str| net.node_by_label(l).unwrap();
        assert_eq!(net.weight(id("militia"), id("civilians")), 2.0);
        assert_eq!(net.weight(id("civilians"), id("militia")), 0.0);
    }

    #[test]
    fn empty_file_after_header_gives_empty_network() {
        let net = parse_events_csv("actor_a,actor_b,directed,count\n").unwrap();
        assert_eq!(net.node_count(), 0);
    }

    #[test]
    fn repeated_rows_accumulate() {
        let net = parse_events_csv(
            "actor_a,actor_b,directed,count\nx,y,false,1\nx,y,false,2\ny,x,true,1\n",
        )
        .unwrap();
        let id = |l: &str| net.node_by_label(l).unwrap();
        assert_eq!(net.weight(id("x"), id("y")), 3.0);
        assert_eq!(net.weight(id("y"), id("x")), 4.0);
    }

    #[test]
    fn self_conflict_is_rejected() {
        match parse_events_csv("actor_a,actor_b,directed,count\nx,x,false,1\n") {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("self-loop")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn non_positive_count_is_rejected() {
        assert!(matches!(
            parse_events_csv("actor_a,actor_b,directed,count\nx,y,false,0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_events_csv("actor_a,actor_b,directed,count\nx,y,false,-2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn header_and_field_count_are_checked() {
        assert!(matches!(parse_events_csv(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_events_csv("a,b,c\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_events_csv("actor_a,actor_b,directed,count\nx,y,false\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_events_csv("actor_a,actor_b,directed,count\nx,y,maybe,1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
