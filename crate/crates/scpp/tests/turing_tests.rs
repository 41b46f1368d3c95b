//! Turing-interpreter integration tests: the built-in one-digit adder pins,
//! and a generated family of n-bit "walking" adders checked against integer
//! arithmetic — a machine the interpreter has never seen, exercising long
//! walks, left-end bounces, and data-independent step counts.

use scpp::error::Error;
use scpp::turing::{adder_machine, run, Action, TuringMachine, BLANK, LEFT_END};

/// Build an n-bit binary adder that walks the tape. Layout: cell 0 holds
/// the left-end marker, cells 1..=n the first operand (least significant
/// bit first), cells n+1..=2n the second operand, and cells 2n+1..=3n+1
/// receive the sum. Round i reads bit i of each operand on a rightward
/// walk, writes the sum bit, then walks back to the marker and out to
/// column i+1 — Θ(n) states per round, Θ(n²) transitions overall.
fn walking_adder(n: usize) -> TuringMachine {
    assert!(n >= 1);
    let bits = ['0', '1'];
    let mut t: Vec<((String, char), (String, Action))> = Vec::new();

    // A(j, c, rem): walking right toward operand bit a_j with carry c;
    // at rem = 0 the scanned cell is a_j itself.
    for j in 1..=n {
        for c in 0..2u8 {
            for rem in 0..j {
                let name = format!("A{j}c{c}r{rem}");
                if rem > 0 {
                    let next = format!("A{j}c{c}r{}", rem - 1);
                    for &s in &bits {
                        t.push(((name.clone(), s), (next.clone(), Action::Right)));
                    }
                } else {
                    for (x, &s) in bits.iter().enumerate() {
                        let next = format!("B{j}c{c}x{x}r{}", n - 1);
                        t.push(((name.clone(), s), (next, Action::Right)));
                    }
                }
            }
        }
    }

    // B(i, c, x, rem): carrying the read bit x toward b_i, n cells away.
    for i in 1..=n {
        for c in 0..2u8 {
            for x in 0..2u8 {
                for rem in 0..n {
                    let name = format!("B{i}c{c}x{x}r{rem}");
                    if rem > 0 {
                        let next = format!("B{i}c{c}x{x}r{}", rem - 1);
                        for &s in &bits {
                            t.push(((name.clone(), s), (next.clone(), Action::Right)));
                        }
                    } else {
                        for (y, &s) in bits.iter().enumerate() {
                            let total = c + x + y as u8;
                            let sigma = total % 2;
                            let carry = u8::from(total >= 2);
                            let next = format!("O{i}s{sigma}c{carry}r{}", n - 1);
                            t.push(((name.clone(), s), (next, Action::Right)));
                        }
                    }
                }
            }
        }
    }

    // O(i, sigma, c, rem): carrying the computed sum bit toward output
    // cell 2n+i; the destination is the first blank on the walk.
    for i in 1..=n {
        for sigma in 0..2u8 {
            for c in 0..2u8 {
                for rem in 0..n {
                    let name = format!("O{i}s{sigma}c{c}r{rem}");
                    if rem > 0 {
                        let next = format!("O{i}s{sigma}c{c}r{}", rem - 1);
                        for &s in &bits {
                            t.push(((name.clone(), s), (next.clone(), Action::Right)));
                        }
                    } else {
                        let write = bits[sigma as usize];
                        let next = if i < n {
                            format!("W{i}c{c}")
                        } else {
                            format!("Wlastc{c}")
                        };
                        t.push(((name, BLANK), (next, Action::Write(write))));
                    }
                }
            }
        }
    }

    // W(i, c): sum bit written, head still on it; turn around.
    for i in 1..n {
        for c in 0..2u8 {
            let name = format!("W{i}c{c}");
            let next = format!("L{}c{c}", i + 1);
            for &s in &bits {
                t.push(((name.clone(), s), (next.clone(), Action::Left)));
            }
        }
    }

    // L(j, c): walk left to the marker, bounce right into round j.
    for j in 2..=n {
        for c in 0..2u8 {
            let name = format!("L{j}c{c}");
            for &s in &bits {
                t.push(((name.clone(), s), (name.clone(), Action::Left)));
            }
            let next = format!("A{j}c{c}r{}", j - 1);
            t.push(((name, LEFT_END), (next, Action::Right)));
        }
    }

    // Final round: step past the last sum bit and write the carry.
    for c in 0..2u8 {
        let name = format!("Wlastc{c}");
        let next = format!("F{c}");
        for &s in &bits {
            t.push(((name.clone(), s), (next.clone(), Action::Right)));
        }
        t.push((
            (format!("F{c}"), BLANK),
            ("sf".to_string(), Action::Write(bits[c as usize])),
        ));
    }

    TuringMachine::new(bits, "A1c0r0", ["sf".to_string()], t).unwrap()
}

/// n-bit little-endian rendering of a value.
fn lsb_bits(value: usize, n: usize) -> String {
    (0..n)
        .map(|k| if value >> k & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Expected final tape for the walking adder: marker, both operands as
/// given, then the (n+1)-bit sum.
fn expected_tape(a: usize, b: usize, n: usize) -> String {
    format!(
        ">{}{}{}",
        lsb_bits(a, n),
        lsb_bits(b, n),
        lsb_bits(a + b, n + 1)
    )
}

#[test]
fn builtin_adder_matches_its_published_behavior() {
    let m = adder_machine();
    let cases = [
        ("00", "0", 3),
        ("01", "1", 3),
        ("10", "1", 3),
        ("11", "10", 5),
    ];
    for (input, sum, steps) in cases {
        let (tape, used) = run(&m, input, 100).unwrap();
        // The sum appears after the marker and the two input digits.
        assert_eq!(&tape[3..], sum, "input {input}");
        assert_eq!(used, steps, "input {input}");
        assert!(used <= 5, "input {input} took {used} invocations");
    }
}

#[test]
fn one_bit_walking_adder_handles_all_four_pairs() {
    let m = walking_adder(1);
    for a in 0..2 {
        for b in 0..2 {
            let input = format!("{}{}", lsb_bits(a, 1), lsb_bits(b, 1));
            let (tape, steps) = run(&m, &input, 1_000).unwrap();
            assert_eq!(tape, expected_tape(a, b, 1), "{a} + {b}");
            assert_eq!(steps, 5, "{a} + {b}");
        }
    }
}

#[test]
fn two_bit_walking_adder_matches_integer_arithmetic_on_all_pairs() {
    let m = walking_adder(2);
    for a in 0..4 {
        for b in 0..4 {
            let input = format!("{}{}", lsb_bits(a, 2), lsb_bits(b, 2));
            let (tape, steps) = run(&m, &input, 1_000).unwrap();
            assert_eq!(tape, expected_tape(a, b, 2), "{a} + {b}");
            // The walk pattern is positional, so the step count is
            // data-independent.
            assert_eq!(steps, 19, "{a} + {b}");
        }
    }
}

#[test]
fn three_bit_walking_adder_matches_integer_arithmetic_on_all_pairs() {
    let m = walking_adder(3);
    for a in 0..8 {
        for b in 0..8 {
            let input = format!("{}{}", lsb_bits(a, 3), lsb_bits(b, 3));
            let (tape, steps) = run(&m, &input, 10_000).unwrap();
            assert_eq!(tape, expected_tape(a, b, 3), "{a} + {b}");
            assert_eq!(steps, 43, "{a} + {b}");
        }
    }
}

#[test]
fn walking_adder_steps_grow_superlinearly_but_stay_quadratic() {
    let steps_of = |n: usize| {
        let m = walking_adder(n);
        let input = format!("{}{}", lsb_bits(1, n), lsb_bits(1, n));
        run(&m, &input, 100_000).unwrap().1
    };
    let (s1, s2, s4) = (steps_of(1), steps_of(2), steps_of(4));
    assert!(s2 > 2 * s1, "doubling n should more than double steps");
    assert!(s2 < 16 * s1);
    assert!(s4 > 2 * s2);
    assert!(s4 < 16 * s2);
}

#[test]
fn walking_adder_round_trips_through_its_text_format() {
    let m = walking_adder(2);
    let reparsed = TuringMachine::parse(&m.to_string()).unwrap();
    assert_eq!(reparsed.rule_count(), m.rule_count());
    let input = "1101"; // 3 + 2
    assert_eq!(
        run(&reparsed, input, 1_000).unwrap(),
        run(&m, input, 1_000).unwrap()
    );
}

#[test]
fn truncated_input_strands_the_machine() {
    // With only one operand on the tape, the walk to the second operand
    // reads a blank the adder has no rule for.
    let m = walking_adder(1);
    let err = run(&m, "1", 1_000).unwrap_err();
    match err {
        Error::MachineStuck {
            state,
            symbol,
            steps,
        } => {
            assert_eq!(state, "B1c0x1r0");
            assert_eq!(symbol, "_");
            assert_eq!(steps, 1);
        }
        other => panic!("expected MachineStuck, got {other:?}"),
    }
}

#[test]
fn tight_step_limits_cut_the_run_short() {
    let m = walking_adder(1);
    assert!(matches!(run(&m, "11", 4), Err(Error::StepLimit(4))));
    assert!(run(&m, "11", 5).is_ok());
}
