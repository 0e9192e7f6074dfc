//! Known-good reference arrays and decode transcripts used by the golden
//! verification suite and the test batteries.

use crate::array::CodeArray;
use crate::gf::Field;

/// 5x5 member of EBR(5,3,2,1).
pub fn ebr5_r3() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 0, 0, 1, 0],
        &[1, 1, 1, 0, 1],
        &[0, 1, 1, 0, 0],
        &[0, 1, 1, 0, 0],
        &[0, 1, 1, 1, 1],
    ])
}

/// The 4x5 slope-parity image of [`ebr5_r3`] under the column transform.
pub fn br5_r3_image() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 1, 1, 0, 1],
        &[1, 0, 0, 1, 0],
        &[0, 0, 0, 1, 1],
        &[0, 0, 0, 1, 1],
    ])
}

/// An independent 4x5 member of BR(5,3,2).
pub fn br5_r3() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 0, 0, 0, 1],
        &[1, 1, 1, 0, 1],
        &[0, 1, 0, 0, 1],
        &[0, 1, 0, 0, 1],
    ])
}

/// First 7x7 member of EBR(7,3,2,1+x+x^3); also the decode target of the
/// worked three-column scenario.
pub fn ebr7_hamming_a() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 0, 1, 0, 1, 0, 1],
        &[1, 1, 1, 0, 0, 0, 1],
        &[0, 1, 1, 0, 0, 1, 1],
        &[0, 1, 0, 0, 1, 0, 0],
        &[1, 0, 0, 0, 0, 1, 0],
        &[0, 0, 1, 0, 1, 1, 1],
        &[1, 1, 0, 0, 1, 1, 0],
    ])
}

/// Second 7x7 member of EBR(7,3,2,1+x+x^3); its weight 16 is the minimum.
pub fn ebr7_hamming_b() -> CodeArray {
    CodeArray::from_rows(&[
        &[0, 0, 0, 0, 0, 1, 1],
        &[0, 0, 0, 1, 1, 0, 0],
        &[0, 0, 0, 1, 0, 1, 0],
        &[0, 0, 0, 1, 1, 1, 1],
        &[0, 0, 0, 0, 1, 1, 0],
        &[0, 0, 0, 0, 1, 0, 1],
        &[0, 0, 0, 1, 0, 0, 1],
    ])
}

/// The worked decode input: columns 1, 3, 6 gone, three scattered erasures
/// in columns 0 and 4, and length-4 bursts in columns 2 (wrap-around) and 5.
/// `None` marks an erasure.
pub fn ebr7_decode_scenario() -> CodeArray {
    let cells: [[Option<u8>; 7]; 7] = [
        [None, None, None, None, Some(1), Some(0), None],
        [Some(1), None, None, None, None, Some(0), None],
        [None, None, Some(1), None, Some(0), None, None],
        [Some(0), None, Some(0), None, None, None, None],
        [Some(1), None, Some(0), None, Some(0), None, None],
        [None, None, None, None, Some(1), None, None],
        [Some(1), None, None, None, None, Some(1), None],
    ];
    let mut a = CodeArray::zero(7, 7);
    for (r, row) in cells.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            match cell {
                Some(v) => a.set(r, c, *v),
                None => a.erase(r, c),
            }
        }
    }
    a
}

/// The same scenario after the local (per-column) phase only.
pub fn ebr7_decode_after_local() -> CodeArray {
    let mut a = ebr7_hamming_a().clone();
    for c in [1usize, 3, 6] {
        a.erase_column(c);
    }
    a
}

/// GF(8) member of EBR(7,3,8,beta+x), beta a root of 1+x+x^3.
/// Entries are beta exponents, -1 standing for the zero symbol.
pub fn ebr7_gf8() -> CodeArray {
    const EXPS: [[i8; 7]; 7] = [
        [-1, 4, 0, -1, 0, 1, 2],
        [5, 6, 5, 4, 1, 6, 2],
        [5, 5, 4, -1, 1, 3, 5],
        [2, 4, -1, 2, -1, 4, -1],
        [2, 4, 1, 3, 4, 0, 2],
        [3, 4, 4, 1, 0, 4, 4],
        [3, 1, 2, 3, 4, 6, 6],
    ];
    let f = Field::new(3, 0b1011).expect("1+x+x^3 is primitive");
    let mut a = CodeArray::zero(7, 7);
    for (r, row) in EXPS.iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            if e >= 0 {
                a.set(r, c, f.exp(e as usize));
            }
        }
    }
    a
}

/// 5x8 member of EIP(5,3,2,1).
pub fn eip5_r3() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 0, 0, 1, 1, 1, 0, 0],
        &[0, 1, 0, 1, 1, 1, 0, 0],
        &[0, 0, 0, 0, 1, 1, 1, 1],
        &[1, 1, 0, 1, 1, 0, 0, 1],
        &[0, 0, 0, 1, 0, 1, 1, 0],
    ])
}

/// The 4x8 independent-parity image of [`eip5_r3`] under the column transform.
pub fn ip5_r3_image() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 0, 0, 0, 1, 0, 1, 0],
        &[0, 1, 0, 0, 1, 0, 1, 0],
        &[0, 0, 0, 1, 1, 0, 0, 1],
        &[1, 1, 0, 0, 1, 1, 1, 1],
    ])
}

/// 7x10 member of EIP(7,3,2,1+x+x^3), the starting point of the update walkthrough.
pub fn eip7_update_before() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 0, 0, 1, 0, 0, 1, 1, 0, 0],
        &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0],
        &[1, 1, 1, 0, 1, 1, 1, 0, 0, 1],
        &[0, 1, 0, 1, 1, 0, 0, 1, 0, 0],
        &[0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
        &[1, 0, 1, 1, 0, 1, 1, 1, 0, 1],
        &[0, 1, 1, 1, 1, 1, 0, 1, 0, 1],
    ])
}

/// The same array after rewriting the symbol at row 2 of data column 1.
pub fn eip7_update_after() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 0, 0, 1, 0, 0, 1, 1, 1, 1],
        &[1, 1, 0, 0, 1, 0, 1, 0, 0, 1],
        &[1, 0, 1, 0, 1, 1, 1, 1, 0, 1],
        &[0, 1, 0, 1, 1, 0, 0, 1, 1, 0],
        &[0, 1, 1, 0, 0, 1, 0, 1, 0, 0],
        &[1, 1, 1, 1, 0, 1, 1, 0, 1, 1],
        &[0, 0, 1, 1, 1, 1, 0, 0, 1, 0],
    ])
}

/// 7x7 member of BRVP(7,3,2).
pub fn brvp7_r3() -> CodeArray {
    CodeArray::from_rows(&[
        &[0, 1, 1, 1, 0, 1, 0],
        &[0, 0, 1, 0, 0, 1, 0],
        &[0, 0, 1, 0, 1, 0, 0],
        &[0, 0, 0, 1, 0, 1, 0],
        &[1, 1, 0, 0, 1, 1, 0],
        &[0, 1, 0, 1, 0, 0, 0],
        &[1, 1, 1, 1, 0, 0, 0],
    ])
}

/// Weight-12 member of EBR(7,4,2,1): the minimum for that code.
pub fn ebr7_r4_weight12() -> CodeArray {
    CodeArray::from_rows(&[
        &[0, 0, 0, 0, 1, 0, 1],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 1, 0, 0],
        &[0, 0, 0, 0, 1, 1, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 1, 0, 0],
        &[0, 0, 1, 1, 0, 1, 1],
    ])
}

/// Weight-10 member of BRVP(7,4,2): the minimum for that code.
pub fn brvp7_r4_weight10() -> CodeArray {
    CodeArray::from_rows(&[
        &[0, 0, 0, 0, 0, 1, 1],
        &[0, 0, 0, 0, 1, 1, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 1],
        &[0, 1, 1, 0, 0, 0, 0],
    ])
}

/// Minimum-weight witnesses 2(r+1) for EBR(7,r,2,1), r in {1,2,3,5,6}.
pub fn ebr7_weight_witnesses() -> Vec<(usize, CodeArray)> {
    vec![
        (
            1,
            CodeArray::from_rows(&[
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 1, 1],
                &[0, 0, 0, 0, 0, 1, 1],
            ]),
        ),
        (
            2,
            CodeArray::from_rows(&[
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 1, 1],
                &[0, 0, 0, 0, 1, 0, 1],
                &[0, 0, 0, 0, 1, 1, 0],
            ]),
        ),
        (
            3,
            CodeArray::from_rows(&[
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 1, 1],
                &[0, 0, 0, 0, 1, 0, 1],
                &[0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 1, 0, 1, 0],
                &[0, 0, 0, 1, 1, 0, 0],
            ]),
        ),
        (
            5,
            CodeArray::from_rows(&[
                &[0, 1, 0, 0, 1, 0, 0],
                &[0, 1, 1, 0, 0, 0, 0],
                &[0, 0, 0, 1, 0, 1, 0],
                &[0, 0, 1, 0, 1, 0, 0],
                &[0, 0, 0, 0, 0, 1, 1],
                &[0, 0, 0, 1, 0, 0, 1],
                &[0, 0, 0, 0, 0, 0, 0],
            ]),
        ),
        (
            6,
            CodeArray::from_rows(&[
                &[1, 1, 0, 0, 0, 0, 0],
                &[0, 1, 1, 0, 0, 0, 0],
                &[0, 0, 1, 1, 0, 0, 0],
                &[0, 0, 0, 1, 1, 0, 0],
                &[0, 0, 0, 0, 1, 1, 0],
                &[0, 0, 0, 0, 0, 1, 1],
                &[1, 0, 0, 0, 0, 0, 1],
            ]),
        ),
    ]
}

/// 4x5 member of PEBR(5,2,2,1) whose slope-1 lines through anchors 1 and 3
/// are recoverable even though two such lines are ambiguous for plain
/// slope-parity arrays.
pub fn pebr5_r2() -> CodeArray {
    CodeArray::from_rows(&[
        &[1, 1, 1, 0, 1],
        &[1, 0, 1, 1, 1],
        &[0, 1, 1, 0, 0],
        &[0, 1, 1, 0, 0],
    ])
}

/// The 5x5 all-ones-on-two-diagonals array: a valid BRVP(5,2,2) member, which
/// is why two erased slope-1 lines are ambiguous there but not in EBR(5,2,2,1).
pub fn brvp5_ambiguity_witness() -> CodeArray {
    CodeArray::from_rows(&[
        &[0, 1, 0, 0, 1],
        &[1, 0, 0, 1, 0],
        &[0, 0, 1, 0, 1],
        &[0, 1, 0, 1, 0],
        &[1, 0, 1, 0, 0],
    ])
}
