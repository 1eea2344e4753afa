//! Byte encoding of labeled graphs, used as the identity of basis elements.
//!
//! Layout (all integers little-endian `u32`):
//! `"DG" 0x01`, vertex count, then per vertex the in-port count and labels
//! followed by the out-port count and labels, then the edge count and
//! `(out, in)` pairs in sorted order, then the gray and white dangling lists.

use std::collections::BTreeSet;

use super::diagram::{DiagGraph, Edge, PortId, Vertex};
use crate::error::DecodeError;

const MAGIC: &[u8; 3] = b"DG\x01";

fn put(out: &mut Vec<u8>, n: u32) {
    out.extend_from_slice(&n.to_le_bytes());
}

fn put_ports(out: &mut Vec<u8>, ports: &[PortId]) {
    put(out, ports.len() as u32);
    for p in ports {
        put(out, p.0);
    }
}

pub fn canonical_encode(g: &DiagGraph) -> Vec<u8> {
    let mut out = Vec::with_capacity(64);
    out.extend_from_slice(MAGIC);
    put(&mut out, g.vertices().len() as u32);
    for v in g.vertices() {
        put_ports(&mut out, &v.in_ports);
        put_ports(&mut out, &v.out_ports);
    }
    put(&mut out, g.edges().len() as u32);
    for e in g.edges() {
        put(&mut out, e.out_port.0);
        put(&mut out, e.in_port.0);
    }
    put_ports(&mut out, g.dangling_in());
    put_ports(&mut out, g.dangling_out());
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn u32(&mut self) -> Result<u32, DecodeError> {
        let end = self.pos + 4;
        let chunk = self
            .bytes
            .get(self.pos..end)
            .ok_or(DecodeError::Truncated(self.pos))?;
        self.pos = end;
        Ok(u32::from_le_bytes(chunk.try_into().unwrap()))
    }

    /// A count that must fit in the remaining input at `width` bytes per item.
    fn count(&mut self, width: usize) -> Result<usize, DecodeError> {
        let n = self.u32()? as usize;
        if n.saturating_mul(width) > self.bytes.len() - self.pos {
            return Err(DecodeError::Truncated(self.bytes.len()));
        }
        Ok(n)
    }

    fn ports(&mut self) -> Result<Vec<PortId>, DecodeError> {
        let n = self.count(4)?;
        (0..n).map(|_| self.u32().map(PortId)).collect()
    }
}

/// Inverse of [`canonical_encode`]; rejects anything that is not a valid graph.
pub fn canonical_decode(bytes: &[u8]) -> Result<DiagGraph, DecodeError> {
    if bytes.get(..MAGIC.len()) != Some(&MAGIC[..]) {
        return Err(DecodeError::BadHeader);
    }
    let mut r = Reader {
        bytes,
        pos: MAGIC.len(),
    };
    let vertex_count = r.count(8)?;
    let mut vertices = Vec::with_capacity(vertex_count);
    for _ in 0..vertex_count {
        let in_ports = r.ports()?;
        let out_ports = r.ports()?;
        vertices.push(Vertex {
            in_ports,
            out_ports,
        });
    }
    let edge_count = r.count(8)?;
    let mut edges = BTreeSet::new();
    let mut previous: Option<Edge> = None;
    for _ in 0..edge_count {
        let e = Edge {
            out_port: PortId(r.u32()?),
            in_port: PortId(r.u32()?),
        };
        if previous.is_some_and(|p| p >= e) {
            return Err(DecodeError::Malformed("edges not in sorted order".into()));
        }
        previous = Some(e);
        edges.insert(e);
    }
    let dangling_in = r.ports()?;
    let dangling_out = r.ports()?;
    if r.pos != bytes.len() {
        return Err(DecodeError::TrailingBytes(bytes.len() - r.pos));
    }
    Ok(DiagGraph::from_parts(vertices, edges, dangling_in, dangling_out)?)
}
