//! Plain-text edge lists and DOT export.
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v` or
//! `u v p q`, where `p` and `q` are the ports of the edge at `u` and `v`.
//! Ports must be given on every line or on none. Blank lines and lines
//! starting with `#` are skipped.

use std::fmt::Write as _;

use super::{Graph, GraphError, RotationMap};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let head = parse_numbers(hline, header)?;
        let [n, m] = head[..] else {
            return Err(parse_err(hline, "header must be `n m`"));
        };

        let mut edges = Vec::with_capacity(m);
        let mut ports = Vec::with_capacity(m);
        for (lineno, line) in lines {
            match parse_numbers(lineno, line)?[..] {
                [u, v] => {
                    edges.push((u, v));
                    ports.push(None);
                }
                [u, v, p, q] => {
                    edges.push((u, v));
                    ports.push(Some((p, q)));
                }
                _ => return Err(parse_err(lineno, "expected `u v` or `u v p q`")),
            }
        }
        if edges.len() != m {
            return Err(parse_err(hline, format!("header announces {m} edges, found {}", edges.len())));
        }
        let ports: Option<Vec<(usize, usize)>> = if ports.iter().all(Option::is_none) {
            None
        } else {
            let all: Option<Vec<_>> = ports.into_iter().collect();
            Some(all.ok_or_else(|| parse_err(hline, "ports given on only some lines"))?)
        };

        let g = Graph::from_edges_strict(n, edges.iter().copied())?;
        match ports {
            Some(p) => {
                let mut table: Vec<Vec<Option<(usize, usize)>>> =
                    (0..n).map(|v| vec![None; g.degree(v)]).collect();
                for (&(u, v), &(pu, pv)) in edges.iter().zip(&p) {
                    for (x, px, y, py) in [(u, pu, v, pv), (v, pv, u, pu)] {
                        let slot = table[x]
                            .get_mut(px)
                            .ok_or_else(|| parse_err(0, format!("port {px} out of range at vertex {x}")))?;
                        if slot.is_some() {
                            return Err(parse_err(0, format!("port {px} used twice at vertex {x}")));
                        }
                        *slot = Some((y, py));
                    }
                }
                let ports = table
                    .into_iter()
                    .map(|row| row.into_iter().map(|s| s.expect("every port filled")).collect())
                    .collect();
                g.with_rotation_map(RotationMap::from_ports(ports))
            }
            None => Ok(g),
        }
    }

    /// Inverse of [`Graph::parse_edge_list`]; ports are written when a
    /// rotation map is attached.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            match self.rotation_map() {
                Some(rot) => {
                    let p = rot.port_towards(u, v).expect("validated rotation map");
                    let q = rot.rotate(u, p).1;
                    writeln!(out, "{u} {v} {p} {q}").unwrap();
                }
                None => writeln!(out, "{u} {v}").unwrap(),
            }
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.vertex_count() {
            if self.degree(v) == 0 {
                writeln!(out, "  {v};").unwrap();
            }
        }
        for (u, v) in self.edges() {
            match self.rotation_map() {
                Some(rot) => {
                    let p = rot.port_towards(u, v).expect("validated rotation map");
                    let q = rot.rotate(u, p).1;
                    writeln!(out, "  {u} -- {v} [taillabel=\"{p}\", headlabel=\"{q}\"];").unwrap();
                }
                None => writeln!(out, "  {u} -- {v};").unwrap(),
            }
        }
        out.push_str("}\n");
        out
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>, GraphError> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|e| parse_err(line, format!("`{t}`: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_list() {
        let g = Graph::parse_edge_list("# triangle\n3 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.rotation_map().is_none());
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn parses_ports() {
        let text = "4 4\n0 1 0 1\n1 2 0 1\n2 3 0 1\n0 3 1 0\n";
        let g = Graph::parse_edge_list(text).unwrap();
        let rot = g.rotation_map().unwrap();
        assert_eq!(rot.rotate(0, 0), (1, 1));
        assert_eq!(rot.rotate(0, 1), (3, 0));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1 0 0\n1 2\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 0\n").is_err());
        // ports that do not form an involution
        assert!(Graph::parse_edge_list("3 2\n0 1 0 0\n1 2 0 0\n").is_err());
    }

    #[test]
    fn dot_output_lists_edges() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let dot = g.to_dot("g");
        assert!(dot.starts_with("graph g {"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("  2;"));
    }
}
