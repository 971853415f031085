//! Streaming reader/writer for the planar-code binary format.
//!
//! The format, as emitted by fullerene isomer generators: an optional ASCII
//! file header `>>planar_code<<`, then one self-delimiting record per graph.
//! A record is the vertex count `n` as one byte, followed for each vertex
//! 1..n by its clockwise neighbour list terminated by a 0. When `n > 255`
//! the record starts with a 0 escape byte and `n` plus every id and
//! terminator are 2-byte little-endian values.
//!
//! Reading is strictly streaming: memory use is bounded by one record.

use std::io::{self, Read, Write};

use thiserror::Error;

use crate::graph::{FullereneGraph, GraphError, VertexId};

/// File header written by the common generators. Optional on read.
pub const HEADER: &[u8] = b">>planar_code<<";

/// Decode/encode failures. Errors that refer to a record carry its 0-based
/// ordinal and the byte offset of the record start.
#[derive(Debug, Error)]
pub enum CodecError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("bad file header at offset {offset}")]
    BadHeader { offset: u64 },
    #[error("record {ordinal} at offset {offset} is truncated")]
    TruncatedRecord { ordinal: u64, offset: u64 },
    #[error("record {ordinal} at offset {offset}: vertex {vertex} has degree {degree}, not 3")]
    NonCubicRecord { ordinal: u64, offset: u64, vertex: u32, degree: u32 },
    #[error("record {ordinal} at offset {offset}: id {id} out of range 1..={order}")]
    IdOutOfRange { ordinal: u64, offset: u64, id: u32, order: u32 },
    #[error("record {ordinal} at offset {offset}: {source}")]
    Graph {
        ordinal: u64,
        offset: u64,
        #[source]
        source: GraphError,
    },
    #[error("order {order} does not fit the narrow format; write with wide = true")]
    OrderTooLargeForNarrow { order: u32 },
}

impl CodecError {
    /// True when the stream position is still at a record boundary and
    /// reading may continue with the next record.
    pub fn is_recoverable(&self) -> bool {
        matches!(
            self,
            CodecError::NonCubicRecord { .. }
                | CodecError::IdOutOfRange { .. }
                | CodecError::Graph { .. }
        )
    }
}

/// One decoded record with its provenance and exact source bytes.
#[derive(Debug)]
pub struct Record {
    /// 0-based record index within the stream.
    pub ordinal: u64,
    /// Byte offset of the record start.
    pub offset: u64,
    /// The record exactly as read.
    pub bytes: Vec<u8>,
    /// Whether the record used the 16-bit wide variant.
    pub wide: bool,
    /// The graph, or the semantic error that makes this record unusable.
    pub graph: Result<FullereneGraph, CodecError>,
}

/// Streaming planar-code reader over any byte source.
pub struct PlanarCodeReader<R: Read> {
    source: R,
    offset: u64,
    graphs_read: u64,
    records_seen: u64,
    header_checked: bool,
    fused: bool,
    peeked: Option<u8>,
}

impl<R: Read> PlanarCodeReader<R> {
    pub fn new(source: R) -> Self {
        PlanarCodeReader {
            source,
            offset: 0,
            graphs_read: 0,
            records_seen: 0,
            header_checked: false,
            fused: false,
            peeked: None,
        }
    }

    /// Number of successfully decoded graphs so far.
    pub fn graphs_read(&self) -> u64 {
        self.graphs_read
    }

    /// Number of records encountered so far, decodable or not.
    pub fn records_seen(&self) -> u64 {
        self.records_seen
    }

    /// Current byte offset into the stream.
    pub fn offset(&self) -> u64 {
        self.offset
    }

    fn read_byte(&mut self, record: Option<&mut Vec<u8>>) -> Result<Option<u8>, io::Error> {
        let b = match self.peeked.take() {
            Some(b) => Some(b),
            None => {
                let mut buf = [0u8; 1];
                let mut got = None;
                loop {
                    match self.source.read(&mut buf) {
                        Ok(0) => break,
                        Ok(_) => {
                            got = Some(buf[0]);
                            break;
                        }
                        Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
                        Err(e) => return Err(e),
                    }
                }
                got
            }
        };
        if let Some(b) = b {
            self.offset += 1;
            if let Some(rec) = record {
                rec.push(b);
            }
        }
        Ok(b)
    }

    fn peek_byte(&mut self) -> Result<Option<u8>, io::Error> {
        if self.peeked.is_none() {
            let mut buf = [0u8; 1];
            loop {
                match self.source.read(&mut buf) {
                    Ok(0) => return Ok(None),
                    Ok(_) => {
                        self.peeked = Some(buf[0]);
                        break;
                    }
                    Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(self.peeked)
    }

    /// Consumes the file header if present. Called once, lazily.
    fn check_header(&mut self) -> Result<(), CodecError> {
        self.header_checked = true;
        if self.peek_byte()? != Some(b'>') {
            return Ok(());
        }
        let start = self.offset;
        for &expected in HEADER {
            match self.read_byte(None)? {
                Some(b) if b == expected => {}
                _ => return Err(CodecError::BadHeader { offset: start }),
            }
        }
        Ok(())
    }

    fn read_value(
        &mut self,
        wide: bool,
        record: &mut Vec<u8>,
        ordinal: u64,
        offset: u64,
    ) -> Result<u32, CodecError> {
        let lo = self
            .read_byte(Some(record))?
            .ok_or(CodecError::TruncatedRecord { ordinal, offset })?;
        if !wide {
            return Ok(lo as u32);
        }
        let hi = self
            .read_byte(Some(record))?
            .ok_or(CodecError::TruncatedRecord { ordinal, offset })?;
        Ok(u16::from_le_bytes([lo, hi]) as u32)
    }

    /// Reads the next record, reporting semantic problems per record while
    /// keeping the stream at a record boundary. `Ok(None)` is end-of-stream.
    pub fn next_record(&mut self) -> Result<Option<Record>, CodecError> {
        if self.fused {
            return Ok(None);
        }
        if !self.header_checked {
            if let Err(e) = self.check_header() {
                self.fused = true;
                return Err(e);
            }
        }
        let offset = self.offset;
        let ordinal = self.records_seen;
        let mut bytes = Vec::new();
        let first = match self.read_byte(Some(&mut bytes)) {
            Ok(None) => return Ok(None),
            Ok(Some(b)) => b,
            Err(e) => {
                self.fused = true;
                return Err(e.into());
            }
        };
        self.records_seen += 1;
        let out = self.read_record_body(first, &mut bytes, ordinal, offset);
        match out {
            Ok(record) => {
                if record.graph.is_ok() {
                    self.graphs_read += 1;
                }
                Ok(Some(record))
            }
            Err(e) => {
                // lost the record boundary; no further reads are meaningful
                self.fused = true;
                Err(e)
            }
        }
    }

    fn read_record_body(
        &mut self,
        first: u8,
        bytes: &mut Vec<u8>,
        ordinal: u64,
        offset: u64,
    ) -> Result<Record, CodecError> {
        let wide = first == 0;
        let order = if wide {
            let n = self.read_value(true, bytes, ordinal, offset)?;
            if n == 0 {
                return Err(CodecError::TruncatedRecord { ordinal, offset });
            }
            n
        } else {
            first as u32
        };
        let mut rotation: Vec<[VertexId; 3]> = Vec::with_capacity(order as usize);
        let mut semantic: Option<CodecError> = None;
        for v in 0..order {
            let mut nbs: Vec<u32> = Vec::with_capacity(3);
            loop {
                let id = self.read_value(wide, bytes, ordinal, offset)?;
                if id == 0 {
                    break;
                }
                if id > order && semantic.is_none() {
                    semantic = Some(CodecError::IdOutOfRange { ordinal, offset, id, order });
                }
                nbs.push(id);
            }
            if nbs.len() != 3 {
                if semantic.is_none() {
                    semantic = Some(CodecError::NonCubicRecord {
                        ordinal,
                        offset,
                        vertex: v + 1,
                        degree: nbs.len() as u32,
                    });
                }
                continue;
            }
            if semantic.is_none() {
                rotation.push([nbs[0] - 1, nbs[1] - 1, nbs[2] - 1]);
            }
        }
        let graph = match semantic {
            Some(e) => Err(e),
            None => FullereneGraph::from_adjacency(rotation)
                .map(|g| g.with_label(format!("#{ordinal}@{offset}")))
                .map_err(|source| CodecError::Graph { ordinal, offset, source }),
        };
        Ok(Record { ordinal, offset, bytes: std::mem::take(bytes), wide, graph })
    }

    /// Decodes one graph, or `Ok(None)` at end-of-stream. Records that are
    /// structurally intact but semantically invalid surface as errors; the
    /// reader stays usable afterwards when the error
    /// [is recoverable](CodecError::is_recoverable).
    pub fn read_next(&mut self) -> Result<Option<FullereneGraph>, CodecError> {
        match self.next_record()? {
            None => Ok(None),
            Some(record) => record.graph.map(Some),
        }
    }
}

impl<R: Read> Iterator for PlanarCodeReader<R> {
    type Item = Result<FullereneGraph, CodecError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.read_next().transpose()
    }
}

/// Encodes one record. The wide (16-bit) variant is mandatory for
/// `order > 255` and otherwise optional.
pub fn encode_record(g: &FullereneGraph, wide: bool) -> Result<Vec<u8>, CodecError> {
    let order = g.order();
    if order > 255 && !wide {
        return Err(CodecError::OrderTooLargeForNarrow { order });
    }
    let mut out = Vec::with_capacity(if wide { 3 + 8 * order as usize } else { 1 + 4 * order as usize });
    if wide {
        out.push(0);
        out.extend_from_slice(&(order as u16).to_le_bytes());
        for v in 0..order {
            for w in g.neighbors(v) {
                out.extend_from_slice(&((w + 1) as u16).to_le_bytes());
            }
            out.extend_from_slice(&0u16.to_le_bytes());
        }
    } else {
        out.push(order as u8);
        for v in 0..order {
            for w in g.neighbors(v) {
                out.push((w + 1) as u8);
            }
            out.push(0);
        }
    }
    Ok(out)
}

/// Planar-code writer. The header is never written unless requested.
pub struct PlanarCodeWriter<W: Write> {
    sink: W,
    write_header: bool,
    started: bool,
}

impl<W: Write> PlanarCodeWriter<W> {
    pub fn new(sink: W) -> Self {
        PlanarCodeWriter { sink, write_header: false, started: false }
    }

    /// Emit the `>>planar_code<<` header before the first record.
    pub fn with_header(sink: W) -> Self {
        PlanarCodeWriter { sink, write_header: true, started: false }
    }

    /// Writes one record and returns the number of bytes written.
    pub fn write(&mut self, g: &FullereneGraph, wide: bool) -> Result<usize, CodecError> {
        let mut written = 0;
        if !self.started {
            self.started = true;
            if self.write_header {
                self.sink.write_all(HEADER)?;
                written += HEADER.len();
            }
        }
        let record = encode_record(g, wide)?;
        self.sink.write_all(&record)?;
        Ok(written + record.len())
    }

    pub fn flush(&mut self) -> Result<(), CodecError> {
        Ok(self.sink.flush()?)
    }

    pub fn into_inner(self) -> W {
        self.sink
    }
}
