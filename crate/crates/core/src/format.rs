//! Text (`.cplx` / shelling listing) and JSON formats.
//!
//! Text listing:
//!
//! ```text
//! # comment
//! n=8 d=2
//! 1 4 8 @red
//! 3,4,8 @green
//! ```
//!
//! The optional header fixes `n` and `d` (and may carry `omit=<ids>` for
//! complexes whose ambient set is `[n]` minus some vertices). Facet lines
//! list vertex ids separated by whitespace or commas, optionally wrapped in
//! parentheses, with an optional trailing colour tag. Line order is kept, so
//! the same file describes a complex or a shelling order. A comment of the
//! form `#> a b c @tag` marks the start of a block of steps arising from the
//! facet `(a,b,c)` of a smaller complex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTEX};
use crate::shelling::ShellingOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Red,
    Green,
    Black,
    Blue,
}

impl FromStr for Tag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Tag, String> {
        match s {
            "red" => Ok(Tag::Red),
            "green" => Ok(Tag::Green),
            "black" => Ok(Tag::Black),
            "blue" => Ok(Tag::Blue),
            other => Err(format!("unknown tag `@{other}`")),
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Red => "red",
            Tag::Green => "green",
            Tag::Black => "black",
            Tag::Blue => "blue",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub face: Face,
    pub tag: Option<Tag>,
}

/// Block header: the steps from `start` on arise from `source`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockMark {
    pub start: usize,
    pub source: Face,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<Tag>,
}

/// A parsed listing: header data plus facets in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Listing {
    pub n: Option<u32>,
    pub d: Option<isize>,
    pub omit: Face,
    pub entries: Vec<Entry>,
    pub blocks: Vec<BlockMark>,
}

impl Listing {
    pub fn faces(&self) -> Vec<Face> {
        self.entries.iter().map(|e| e.face).collect()
    }

    pub fn tags(&self) -> Vec<Option<Tag>> {
        self.entries.iter().map(|e| e.tag).collect()
    }

    fn ambient_and_rank(&self) -> Result<(Face, usize)> {
        let n = match self.n {
            Some(n) => n,
            None => self
                .entries
                .iter()
                .map(|e| e.face.max_vertex())
                .max()
                .unwrap_or(0),
        };
        if n > MAX_VERTEX {
            return Err(Error::AmbientTooLarge { n: n as u64 });
        }
        let rank = match (self.d, self.entries.first()) {
            (Some(d), _) if d >= -1 => (d + 1) as usize,
            (Some(d), _) => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("dimension {d} below -1"),
                })
            }
            (None, Some(e)) => e.face.len(),
            (None, None) => {
                return Err(Error::Parse {
                    line: 0,
                    message: "no header and no facets".into(),
                })
            }
        };
        if rank > n as usize {
            return Err(Error::DimensionTooLarge {
                d: rank.saturating_sub(1),
                n: n as usize,
            });
        }
        Ok((Face::range(n).difference(self.omit), rank))
    }

    pub fn to_complex(&self) -> Result<Complex> {
        let (ambient, rank) = self.ambient_and_rank()?;
        Complex::with_ambient(ambient, rank, self.faces())
    }

    /// Shelling order over the complex spanned by the listed facets.
    pub fn to_order(&self) -> Result<ShellingOrder> {
        ShellingOrder::new(self.to_complex()?, self.faces())
    }

    pub fn from_complex(c: &Complex) -> Listing {
        Listing::from_faces(c, c.facets().iter().map(|&f| (f, None)))
    }

    pub fn from_order(order: &ShellingOrder) -> Listing {
        Listing::from_faces(order.complex(), order.steps().iter().map(|&f| (f, None)))
    }

    fn from_faces<I: IntoIterator<Item = (Face, Option<Tag>)>>(c: &Complex, faces: I) -> Listing {
        let n = c.n();
        Listing {
            n: Some(n),
            d: Some(c.dim()),
            omit: Face::range(n).difference(c.ambient()),
            entries: faces
                .into_iter()
                .map(|(face, tag)| Entry { face, tag })
                .collect(),
            blocks: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut header = Vec::new();
        if let Some(n) = self.n {
            header.push(format!("n={n}"));
        }
        if let Some(d) = self.d {
            header.push(format!("d={d}"));
        }
        if !self.omit.is_empty() {
            let ids: Vec<String> = self.omit.vertices().map(|v| v.to_string()).collect();
            header.push(format!("omit={}", ids.join(",")));
        }
        if !header.is_empty() {
            out.push_str(&header.join(" "));
            out.push('\n');
        }
        let mut blocks = self.blocks.iter().peekable();
        for (i, e) in self.entries.iter().enumerate() {
            while let Some(b) = blocks.next_if(|b| b.start == i) {
                out.push_str("#> ");
                out.push_str(&join_ids(b.source));
                if let Some(t) = b.tag {
                    out.push_str(&format!(" @{t}"));
                }
                out.push('\n');
            }
            if e.face.is_empty() {
                out.push_str("()");
            } else {
                out.push_str(&join_ids(e.face));
            }
            if let Some(t) = e.tag {
                out.push_str(&format!(" @{t}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> ListingJson {
        ListingJson {
            n: self.n.unwrap_or(0),
            d: self.d.unwrap_or(-1),
            omit: self.omit.to_vec(),
            facets: self.faces(),
            tags: if self.entries.iter().any(|e| e.tag.is_some()) {
                self.tags()
            } else {
                Vec::new()
            },
            blocks: self.blocks.clone(),
        }
    }
}

fn join_ids(f: Face) -> String {
    let ids: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
    ids.join(" ")
}

/// JSON form: `{"n": 8, "d": 2, "facets": [[1,4,8], ...]}` plus optional
/// `omit`, `tags` (parallel to `facets`) and `blocks`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListingJson {
    pub n: u32,
    pub d: isize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omit: Vec<u32>,
    pub facets: Vec<Face>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<Option<Tag>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<BlockMark>,
}

impl ListingJson {
    fn into_listing(self) -> Result<Listing> {
        if !self.tags.is_empty() && self.tags.len() != self.facets.len() {
            return Err(Error::Parse {
                line: 0,
                message: "`tags` must be parallel to `facets`".into(),
            });
        }
        let omit = Face::from_vertices(self.omit)?;
        let tags = self.tags.into_iter().chain(std::iter::repeat(None));
        let listing = Listing {
            n: Some(self.n),
            d: Some(self.d),
            omit,
            entries: self
                .facets
                .into_iter()
                .zip(tags)
                .map(|(face, tag)| Entry { face, tag })
                .collect(),
            blocks: self.blocks,
        };
        check_listing(&listing)?;
        Ok(listing)
    }
}

/// Parses a text or JSON listing, picking JSON when the first non-blank
/// character is `{`.
pub fn parse_listing(input: &str) -> Result<Listing> {
    if input.trim_start().starts_with('{') {
        let json: ListingJson = serde_json::from_str(input)?;
        json.into_listing()
    } else {
        parse_text(input)
    }
}

pub fn parse_complex(input: &str) -> Result<Complex> {
    parse_listing(input)?.to_complex()
}

pub fn parse_order(input: &str) -> Result<ShellingOrder> {
    parse_listing(input)?.to_order()
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_ids(line: usize, body: &str) -> Result<Face> {
    let body = body.trim();
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .unwrap_or(body);
    let mut ids = Vec::new();
    for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        let id: u64 = tok
            .parse()
            .map_err(|_| parse_err(line, format!("bad vertex id `{tok}`")))?;
        if id == 0 || id > MAX_VERTEX as u64 {
            return Err(parse_err(line, format!("vertex id {id} outside 1..=64")));
        }
        ids.push(id as u32);
    }
    Face::from_vertices(ids).map_err(|e| parse_err(line, e.to_string()))
}

fn split_tag(line: usize, s: &str) -> Result<(&str, Option<Tag>)> {
    match s.split_once('@') {
        Some((body, tag)) => {
            let tag = tag.trim().parse::<Tag>().map_err(|m| parse_err(line, m))?;
            Ok((body, Some(tag)))
        }
        None => Ok((s, None)),
    }
}

fn parse_header(line: usize, s: &str, listing: &mut Listing) -> Result<()> {
    for part in s.split_whitespace() {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("bad header field `{part}`")))?;
        match key {
            "n" => {
                listing.n = Some(
                    value
                        .parse()
                        .map_err(|_| parse_err(line, format!("bad n `{value}`")))?,
                )
            }
            "d" => {
                listing.d = Some(
                    value
                        .parse()
                        .map_err(|_| parse_err(line, format!("bad d `{value}`")))?,
                )
            }
            "omit" => listing.omit = parse_ids(line, value)?,
            other => return Err(parse_err(line, format!("unknown header key `{other}`"))),
        }
    }
    Ok(())
}

fn parse_text(input: &str) -> Result<Listing> {
    let mut listing = Listing::default();
    let mut seen_content = false;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if let Some(rest) = s.strip_prefix("#>") {
            let (body, tag) = split_tag(line, rest)?;
            listing.blocks.push(BlockMark {
                start: listing.entries.len(),
                source: parse_ids(line, body)?,
                tag,
            });
            continue;
        }
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if s.starts_with("n=") || s.starts_with("d=") {
            if seen_content {
                return Err(parse_err(line, "header must precede facets"));
            }
            parse_header(line, s, &mut listing)?;
            seen_content = true;
            continue;
        }
        seen_content = true;
        let (body, tag) = split_tag(line, s)?;
        let face = parse_ids(line, body)?;
        listing.entries.push(Entry { face, tag });
    }
    check_listing(&listing)?;
    Ok(listing)
}

/// Purity and range checks with line-independent messages.
fn check_listing(listing: &Listing) -> Result<()> {
    let (ambient, rank) = listing.ambient_and_rank()?;
    for (i, e) in listing.entries.iter().enumerate() {
        if e.face.len() != rank {
            return Err(parse_err(
                i + 1,
                format!(
                    "facet {} has {} vertices, expected {rank} (complex must be pure)",
                    e.face,
                    e.face.len()
                ),
            ));
        }
        if !e.face.is_subset(ambient) {
            return Err(parse_err(
                i + 1,
                format!("facet {} uses ids outside the ambient set", e.face),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_comments_and_separators() {
        let text = "# demo\nn=5 d=2\n1 2 3\n(2,3,4) @green\n3, 4, 5 @blue\n";
        let l = parse_listing(text).unwrap();
        assert_eq!(l.n, Some(5));
        assert_eq!(l.entries.len(), 3);
        assert_eq!(l.entries[1].tag, Some(Tag::Green));
        let c = l.to_complex().unwrap();
        assert_eq!(c.n(), 5);
        assert_eq!(c.facet_count(), 3);
    }

    #[test]
    fn infers_header() {
        let c = parse_complex("1 2\n2 3\n").unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn rejects_non_pure_and_out_of_range() {
        assert!(parse_complex("n=4 d=2\n1 2 3\n1 2\n").is_err());
        assert!(parse_complex("n=4 d=2\n1 2 5\n").is_err());
        assert!(parse_complex("1 2 0\n").is_err());
        assert!(parse_complex("1 2 x\n").is_err());
        assert!(parse_complex("1 2 3 @purple\n").is_err());
        assert!(parse_complex("n=3 d=2 q=1\n1 2 3\n").is_err());
    }

    #[test]
    fn block_marks_round_trip() {
        let text = "n=8 d=3\n#> 1 2 3 @red\n1 2 3 5\n1 2 3 6 @blue\n#> 1 2 4\n1 2 4 7\n";
        let l = parse_listing(text).unwrap();
        assert_eq!(l.blocks.len(), 2);
        assert_eq!(l.blocks[1].start, 2);
        assert_eq!(parse_listing(&l.to_text()).unwrap(), l);
    }

    #[test]
    fn json_listing() {
        let text = r#"{"n": 4, "d": 2, "facets": [[1,2,3],[2,3,4]]}"#;
        let c = parse_complex(text).unwrap();
        assert_eq!(c.facet_count(), 2);
        let bad = r#"{"n": 4, "d": 2, "facets": [[1,2,3],[2,3]]}"#;
        assert!(parse_complex(bad).is_err());
        let out = serde_json::to_string(&Listing::from_complex(&c).to_json()).unwrap();
        assert_eq!(parse_complex(&out).unwrap(), c);
    }

    #[test]
    fn omitted_vertices_survive() {
        let c = parse_complex("n=4 d=1 omit=3\n1 2\n2 4\n").unwrap();
        assert_eq!(c.ambient(), Face::of(&[1, 2, 4]));
        let text = Listing::from_complex(&c).to_text();
        assert_eq!(parse_complex(&text).unwrap(), c);
    }
}
