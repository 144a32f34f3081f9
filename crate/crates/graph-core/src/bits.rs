use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bit index {index} out of range 1..={width}")]
pub struct BitIndexOutOfRange {
    pub index: u32,
    pub width: u32,
}

/// Binary labels for vertices `0..n`: every vertex id is its own label,
/// read LSB-first with 1-based bit indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexLabelBits {
    width: u32,
}

impl VertexLabelBits {
    /// Label width for `n` vertices: `ceil(log2 n)`, floored at 1 so that
    /// graphs with n <= 2 still have one usable bit.
    pub fn for_n(n: u32) -> VertexLabelBits {
        VertexLabelBits {
            width: ceil_log2(n).max(1),
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// The `i`-th bit (1-based, LSB first) of `v`'s label.
    pub fn bit(&self, v: u32, i: u32) -> Result<u8, BitIndexOutOfRange> {
        if i < 1 || i > self.width {
            return Err(BitIndexOutOfRange {
                index: i,
                width: self.width,
            });
        }
        Ok(bit_unchecked(v, i))
    }
}

/// The `i`-th bit (1-based, LSB first) of `v`, without a width check.
pub fn bit_unchecked(v: u32, i: u32) -> u8 {
    ((v >> (i - 1)) & 1) as u8
}

/// Smallest `w` with `2^w >= x` (0 for x <= 1).
pub fn ceil_log2(x: u32) -> u32 {
    if x <= 1 {
        0
    } else {
        32 - (x - 1).leading_zeros()
    }
}
