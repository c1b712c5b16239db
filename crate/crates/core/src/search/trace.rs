use std::fmt;
use std::str::FromStr;

use crate::graph::NodeId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    Extract,
    Relax,
    Intersection,
    MinimaxUpdate,
    MinsumUpdate,
    SourceTerminated,
    Finished,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Extract => "extract",
            EventKind::Relax => "relax",
            EventKind::Intersection => "intersection",
            EventKind::MinimaxUpdate => "minimax_update",
            EventKind::MinsumUpdate => "minsum_update",
            EventKind::SourceTerminated => "source_terminated",
            EventKind::Finished => "finished",
        }
    }
}

impl FromStr for EventKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "extract" => EventKind::Extract,
            "relax" => EventKind::Relax,
            "intersection" => EventKind::Intersection,
            "minimax_update" => EventKind::MinimaxUpdate,
            "minsum_update" => EventKind::MinsumUpdate,
            "source_terminated" => EventKind::SourceTerminated,
            "finished" => EventKind::Finished,
            other => return Err(format!("unknown event kind {other:?}")),
        })
    }
}

/// One step of the alternating search.
///
/// `source` is the position in the source set, not the node id; it is `None`
/// only for `finished`. `node` is `None` only for a `finished` event of a run
/// that found no intersection.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceEvent {
    pub iteration: usize,
    pub source: Option<usize>,
    pub kind: EventKind,
    pub node: Option<NodeId>,
    pub value: f64,
}

struct Dash<T>(Option<T>);

impl<T: fmt::Display> fmt::Display for Dash<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(v) => v.fmt(f),
            None => f.write_str("-"),
        }
    }
}

/// `iter source kind node value`, with `-` for absent fields.
impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.iteration,
            Dash(self.source),
            self.kind.as_str(),
            Dash(self.node),
            self.value
        )
    }
}

impl FromStr for TraceEvent {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let f: Vec<&str> = s.split_whitespace().collect();
        if f.len() != 5 {
            return Err(format!("expected 5 fields, got {}", f.len()));
        }
        let opt = |t: &str| -> Result<Option<usize>, String> {
            if t == "-" {
                Ok(None)
            } else {
                t.parse()
                    .map(Some)
                    .map_err(|_| format!("bad integer {t:?}"))
            }
        };
        Ok(TraceEvent {
            iteration: f[0]
                .parse()
                .map_err(|_| format!("bad iteration {:?}", f[0]))?,
            source: opt(f[1])?,
            kind: f[2].parse()?,
            node: opt(f[3])?.map(NodeId),
            value: f[4].parse().map_err(|_| format!("bad value {:?}", f[4]))?,
        })
    }
}

/// Line-delimited rendering of a whole trace.
pub fn format_trace(events: &[TraceEvent]) -> String {
    let mut out = String::with_capacity(events.len() * 24);
    for e in events {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_trace(text: &str) -> Result<Vec<TraceEvent>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| l.parse().map_err(|e| format!("line {}: {e}", i + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let e = TraceEvent {
            iteration: 4,
            source: Some(1),
            kind: EventKind::MinimaxUpdate,
            node: Some(NodeId(4)),
            value: 4.0,
        };
        assert_eq!(e.to_string(), "4 1 minimax_update 4 4");
        let fin = TraceEvent {
            iteration: 5,
            source: None,
            kind: EventKind::Finished,
            node: None,
            value: f64::INFINITY,
        };
        assert_eq!(fin.to_string(), "5 - finished - inf");
        let text = format_trace(&[e.clone(), fin.clone()]);
        assert_eq!(parse_trace(&text).unwrap(), vec![e, fin]);
    }

    #[test]
    fn rejects_garbage() {
        assert!("1 0 extract".parse::<TraceEvent>().is_err());
        assert!("1 0 jump 3 4".parse::<TraceEvent>().is_err());
    }
}
