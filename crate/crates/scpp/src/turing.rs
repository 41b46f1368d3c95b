//! A minimal deterministic Turing-machine interpreter.
//!
//! Machines here are single-tape and deterministic, with a marked left end:
//! cell 0 of every tape holds the left-end symbol `>`, the input occupies
//! cells 1 onward, and unwritten cells read as the blank symbol `_`. Each
//! transition either writes one symbol or moves the head one cell — never
//! both — and [`run`] reports the exact number of transition invocations, so
//! step-count claims can be tested without slack.
//!
//! The interpreter exists to make cost-model statements checkable: the
//! bundled [`adder_machine`] adds two one-digit binary numbers in at most
//! five invocations, and the guide's walking adder generalizes the same
//! layout to `n`-digit operands.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// The blank tape symbol.
pub const BLANK: char = '_';

/// The left-end marker occupying cell 0 of every tape.
pub const LEFT_END: char = '>';

/// The effect of one transition: write a symbol, or move the head one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    /// Overwrite the scanned cell with this symbol.
    Write(char),
    /// Move the head one cell to the left.
    Left,
    /// Move the head one cell to the right.
    Right,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Write(c) => write!(f, "{c}"),
            Action::Left => f.write_str("L"),
            Action::Right => f.write_str("R"),
        }
    }
}

/// A deterministic single-tape Turing machine with a marked left end.
///
/// Construction enforces the conventions the interpreter relies on:
///
/// * every transition scanning the left-end symbol moves right, so the head
///   can never fall off the tape;
/// * no transition writes the left-end symbol, so cell 0 is the only cell
///   that ever holds it;
/// * the alphabet never contains `L` or `R`, which keeps the textual rule
///   format (see [`TuringMachine::parse`]) unambiguous.
///
/// The blank and left-end symbols are always part of the alphabet and need
/// not be listed explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuringMachine {
    alphabet: BTreeSet<char>,
    initial: String,
    halting: BTreeSet<String>,
    transitions: BTreeMap<(String, char), (String, Action)>,
}

fn check_state_name(name: &str) -> Result<()> {
    if name.is_empty() {
        return Err(Error::InvalidInput("state names must be non-empty".into()));
    }
    if name.chars().any(char::is_whitespace) || name.contains('#') || name == "->" {
        return Err(Error::InvalidInput(format!(
            "state name {name:?} would be ambiguous in the rule format"
        )));
    }
    Ok(())
}

fn check_symbol(c: char) -> Result<()> {
    if c == 'L' || c == 'R' || c == '#' || c.is_whitespace() {
        return Err(Error::InvalidInput(format!(
            "symbol {c:?} would be ambiguous in the rule format"
        )));
    }
    Ok(())
}

impl TuringMachine {
    /// Builds a machine and checks the structural conventions.
    ///
    /// `alphabet` lists the working symbols; the blank and left-end symbols
    /// are added automatically. `transitions` maps `(state, scanned symbol)`
    /// to `(next state, action)`.
    pub fn new(
        alphabet: impl IntoIterator<Item = char>,
        initial: impl Into<String>,
        halting: impl IntoIterator<Item = String>,
        transitions: impl IntoIterator<Item = ((String, char), (String, Action))>,
    ) -> Result<Self> {
        let mut full: BTreeSet<char> = alphabet.into_iter().collect();
        full.insert(BLANK);
        full.insert(LEFT_END);
        for &c in &full {
            check_symbol(c)?;
        }
        let initial = initial.into();
        check_state_name(&initial)?;
        let halting: BTreeSet<String> = halting.into_iter().collect();
        for h in &halting {
            check_state_name(h)?;
        }
        let transitions: BTreeMap<(String, char), (String, Action)> =
            transitions.into_iter().collect();
        for ((state, scanned), (next, action)) in &transitions {
            check_state_name(state)?;
            check_state_name(next)?;
            if !full.contains(scanned) {
                return Err(Error::InvalidInput(format!(
                    "transition from {state:?} scans {scanned:?}, which is not in the alphabet"
                )));
            }
            if *scanned == LEFT_END && *action != Action::Right {
                return Err(Error::InvalidInput(format!(
                    "transition from {state:?} on the left-end symbol must move right"
                )));
            }
            if let Action::Write(c) = action {
                if *c == LEFT_END {
                    return Err(Error::InvalidInput(format!(
                        "transition from {state:?} writes the left-end symbol"
                    )));
                }
                if !full.contains(c) {
                    return Err(Error::InvalidInput(format!(
                        "transition from {state:?} writes {c:?}, which is not in the alphabet"
                    )));
                }
            }
        }
        Ok(TuringMachine {
            alphabet: full,
            initial,
            halting,
            transitions,
        })
    }

    /// The full alphabet, including the blank and left-end symbols.
    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// The start state.
    pub fn initial(&self) -> &str {
        &self.initial
    }

    /// The halting states.
    pub fn halting(&self) -> &BTreeSet<String> {
        &self.halting
    }

    /// The number of transition rules.
    pub fn rule_count(&self) -> usize {
        self.transitions.len()
    }

    /// Parses a machine from its textual description.
    ///
    /// The format is line-oriented. `#` starts a comment; blank lines are
    /// ignored. Three directives name the machine's parts, and every other
    /// line is one transition rule:
    ///
    /// ```text
    /// alphabet: 0 1
    /// initial: si
    /// halt: sf
    /// si 1 -> sc R
    /// s0b _ -> sf 0
    /// ```
    ///
    /// A rule reads `state symbol -> state action`, where the action is `L`,
    /// `R`, or a symbol to write. Symbols are single characters; `_` is the
    /// blank and `>` the left end. The `halt:` directive may list several
    /// states and may be repeated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Vec<char>> = None;
        let mut initial: Option<String> = None;
        let mut halting: Vec<String> = Vec::new();
        let mut transitions: Vec<((String, char), (String, Action))> = Vec::new();

        let symbol_token = |token: &str, line_no: usize| -> Result<char> {
            let mut chars = token.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(Error::Parse(format!(
                    "line {line_no}: symbol {token:?} must be a single character"
                ))),
            }
        };

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("alphabet:") {
                let mut symbols = Vec::new();
                for token in rest.split_whitespace() {
                    symbols.push(symbol_token(token, line_no)?);
                }
                if alphabet.replace(symbols).is_some() {
                    return Err(Error::Parse(format!(
                        "line {line_no}: duplicate alphabet directive"
                    )));
                }
                continue;
            }
            if let Some(rest) = line.strip_prefix("initial:") {
                let name = rest.trim();
                if name.is_empty() {
                    return Err(Error::Parse(format!(
                        "line {line_no}: initial directive names no state"
                    )));
                }
                if initial.replace(name.to_string()).is_some() {
                    return Err(Error::Parse(format!(
                        "line {line_no}: duplicate initial directive"
                    )));
                }
                continue;
            }
            if let Some(rest) = line.strip_prefix("halt:") {
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(Error::Parse(format!(
                        "line {line_no}: halt directive names no state"
                    )));
                }
                halting.extend(names.into_iter().map(str::to_string));
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 5 || tokens[2] != "->" {
                return Err(Error::Parse(format!(
                    "line {line_no}: expected `state symbol -> state action`, got {line:?}"
                )));
            }
            let scanned = symbol_token(tokens[1], line_no)?;
            let action = match tokens[4] {
                "L" => Action::Left,
                "R" => Action::Right,
                other => Action::Write(symbol_token(other, line_no)?),
            };
            let key = (tokens[0].to_string(), scanned);
            if transitions.iter().any(|(k, _)| *k == key) {
                return Err(Error::Parse(format!(
                    "line {line_no}: duplicate transition for state {:?} reading {scanned:?}",
                    tokens[0]
                )));
            }
            transitions.push((key, (tokens[3].to_string(), action)));
        }

        let alphabet = alphabet.ok_or_else(|| Error::Parse("missing alphabet directive".into()))?;
        let initial = initial.ok_or_else(|| Error::Parse("missing initial directive".into()))?;
        if halting.is_empty() {
            return Err(Error::Parse("missing halt directive".into()));
        }
        TuringMachine::new(alphabet, initial, halting, transitions)
    }
}

impl fmt::Display for TuringMachine {
    /// Writes the machine in the format accepted by [`TuringMachine::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alphabet:")?;
        for &c in &self.alphabet {
            if c != BLANK && c != LEFT_END {
                write!(f, " {c}")?;
            }
        }
        writeln!(f)?;
        writeln!(f, "initial: {}", self.initial)?;
        write!(f, "halt:")?;
        for h in &self.halting {
            write!(f, " {h}")?;
        }
        writeln!(f)?;
        for ((state, scanned), (next, action)) in &self.transitions {
            writeln!(f, "{state} {scanned} -> {next} {action}")?;
        }
        Ok(())
    }
}

/// Runs `machine` on `input` and returns the final tape and the exact number
/// of transition invocations.
///
/// The tape starts as the left-end symbol followed by the input symbols, the
/// head starts at cell 1, and the machine starts in its initial state.
/// Whitespace in `input` is ignored, so `"1 1"` and `"11"` denote the same
/// tape; the remaining characters must belong to the alphabet and may not be
/// the blank or left-end symbol.
///
/// The run stops when the machine enters a halting state. The returned
/// string is the whole tape from cell 0 with trailing blanks removed, so
/// byte `i` of the output is cell `i`; the count is the number of
/// transitions invoked, including the one that entered the halting state.
///
/// Errors: a missing transition yields [`Error::MachineStuck`] and a run
/// still going after `step_limit` invocations yields [`Error::StepLimit`].
pub fn run(machine: &TuringMachine, input: &str, step_limit: u64) -> Result<(String, u64)> {
    let mut tape: Vec<char> = vec![LEFT_END];
    for c in input.chars() {
        if c.is_whitespace() {
            continue;
        }
        if c == BLANK || c == LEFT_END || !machine.alphabet.contains(&c) {
            return Err(Error::InvalidInput(format!(
                "input symbol {c:?} is not an ordinary alphabet symbol"
            )));
        }
        tape.push(c);
    }
    if tape.len() == 1 {
        tape.push(BLANK);
    }

    let mut state = machine.initial.clone();
    let mut head = 1usize;
    let mut steps = 0u64;
    while !machine.halting.contains(&state) {
        if steps == step_limit {
            return Err(Error::StepLimit(step_limit));
        }
        let scanned = tape[head];
        let (next, action) = machine
            .transitions
            .get(&(state.clone(), scanned))
            .ok_or_else(|| Error::MachineStuck {
                state: state.clone(),
                symbol: scanned.to_string(),
                steps,
            })?;
        steps += 1;
        match action {
            Action::Write(c) => tape[head] = *c,
            Action::Left => head = head.saturating_sub(1),
            Action::Right => {
                head += 1;
                if head == tape.len() {
                    tape.push(BLANK);
                }
            }
        }
        state = next.clone();
    }

    let mut out: String = tape.into_iter().collect();
    let trimmed = out.trim_end_matches(BLANK).len();
    out.truncate(trimmed);
    Ok((out, steps))
}

/// Textual description of the one-digit binary adder; see [`adder_machine`].
const ADDER_TEXT: &str = "\
# One-digit binary adder: input digits a, b at cells 1 and 2, sum written
# from cell 3 onward, most significant digit first.
alphabet: 0 1
initial: si
halt: sf

# Read a and remember whether it was 1 (sc) or 0 (snc).
si 1 -> sc R
si 0 -> snc R

# Read b; the pair of digits now determines the sum 0, 1, or 10.
sc 1 -> s1 R
sc 0 -> s1b R
snc 1 -> s1b R
snc 0 -> s0b R

# Sum 10: write the leading 1, step over it, write the trailing 0.
s1 _ -> s1 1
s1 1 -> s0 R
s0 _ -> sf 0

# Sum 1 or 0: write the single digit.
s1b _ -> sf 1
s0b _ -> sf 0
";

/// The one-digit binary adder.
///
/// The input is two binary digits at cells 1 and 2; the sum appears from
/// cell 3 onward, most significant digit first. Every case halts within five
/// transition invocations: the carry-free sums take three, and `1 + 1` takes
/// five because the two-digit answer `10` needs an extra write and move.
///
/// ```
/// use scpp::turing::{adder_machine, run};
///
/// let machine = adder_machine();
/// let (tape, steps) = run(&machine, "1 1", 100).unwrap();
/// assert_eq!(&tape[3..], "10");
/// assert!(steps <= 5);
/// ```
pub fn adder_machine() -> TuringMachine {
    TuringMachine::parse(ADDER_TEXT).expect("the built-in adder description is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stuck_parts(err: Error) -> (String, String, u64) {
        match err {
            Error::MachineStuck {
                state,
                symbol,
                steps,
            } => (state, symbol, steps),
            other => panic!("expected MachineStuck, got {other:?}"),
        }
    }

    #[test]
    fn adder_covers_all_four_inputs_within_five_steps() {
        let machine = adder_machine();
        let cases = [
            ("00", "0", 3),
            ("01", "1", 3),
            ("10", "1", 3),
            ("11", "10", 5),
        ];
        for (input, sum, expected_steps) in cases {
            let (tape, steps) = run(&machine, input, 100).unwrap();
            assert_eq!(&tape[3..], sum, "sum for input {input}");
            assert_eq!(steps, expected_steps, "steps for input {input}");
            assert!(steps <= 5);
        }
    }

    #[test]
    fn input_whitespace_is_ignored() {
        let machine = adder_machine();
        let spaced = run(&machine, "1 1", 100).unwrap();
        let dense = run(&machine, "11", 100).unwrap();
        assert_eq!(spaced, dense);
    }

    #[test]
    fn runs_are_deterministic() {
        let machine = adder_machine();
        assert_eq!(run(&machine, "01", 100), run(&machine, "01", 100));
    }

    #[test]
    fn adder_preserves_its_input_digits() {
        let machine = adder_machine();
        let (tape, _) = run(&machine, "10", 100).unwrap();
        assert_eq!(&tape[..3], ">10");
    }

    #[test]
    fn missing_transition_reports_state_symbol_and_steps() {
        let machine = adder_machine();
        // The adder never defines transitions out of `si` on a blank: running
        // it on a single digit leaves the machine stuck after reading it.
        let err = run(&machine, "1", 100).unwrap_err();
        let (state, symbol, steps) = stuck_parts(err);
        assert_eq!(state, "sc");
        assert_eq!(symbol, "_");
        assert_eq!(steps, 1);
    }

    #[test]
    fn step_limit_is_enforced_exactly() {
        let machine = adder_machine();
        assert_eq!(run(&machine, "11", 4).unwrap_err(), Error::StepLimit(4));
        assert!(run(&machine, "11", 5).is_ok());
    }

    #[test]
    fn rejects_input_outside_the_alphabet() {
        let machine = adder_machine();
        for bad in ["2", "_", ">"] {
            assert!(matches!(
                run(&machine, bad, 100),
                Err(Error::InvalidInput(_))
            ));
        }
    }

    #[test]
    fn left_end_transitions_must_move_right() {
        for action in ["L", "0"] {
            let text = format!("alphabet: 0 1\ninitial: a\nhalt: h\na > -> h {action}\n");
            assert!(matches!(
                TuringMachine::parse(&text),
                Err(Error::InvalidInput(_))
            ));
        }
        let ok = "alphabet: 0 1\ninitial: a\nhalt: h\na > -> h R\n";
        assert!(TuringMachine::parse(ok).is_ok());
    }

    #[test]
    fn nothing_may_write_the_left_end_symbol() {
        let text = "alphabet: 0 1\ninitial: a\nhalt: h\na 0 -> h >\n";
        assert!(matches!(
            TuringMachine::parse(text),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn alphabet_may_not_contain_move_letters() {
        let text = "alphabet: 0 L\ninitial: a\nhalt: h\na 0 -> h R\n";
        assert!(matches!(
            TuringMachine::parse(text),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn head_never_falls_off_the_left_end() {
        // A machine that insists on running left still stays on the tape:
        // the left-end cell forces a right move, so it ping-pongs until the
        // step limit trips rather than indexing out of bounds.
        let text = "\
alphabet: 0 1
initial: a
halt: h
a 0 -> a L
a 1 -> a L
a _ -> a L
a > -> a R
";
        let machine = TuringMachine::parse(text).unwrap();
        assert_eq!(
            run(&machine, "0", 1000).unwrap_err(),
            Error::StepLimit(1000)
        );
    }

    #[test]
    fn display_round_trips_through_parse() {
        let machine = adder_machine();
        let reparsed = TuringMachine::parse(&machine.to_string()).unwrap();
        assert_eq!(machine, reparsed);
        assert_eq!(machine.rule_count(), 11);
    }

    #[test]
    fn parse_rejects_malformed_descriptions() {
        let missing_alphabet = "initial: a\nhalt: h\na 0 -> h R\n";
        let missing_initial = "alphabet: 0\nhalt: h\na 0 -> h R\n";
        let missing_halt = "alphabet: 0\ninitial: a\na 0 -> h R\n";
        let bad_rule = "alphabet: 0\ninitial: a\nhalt: h\na 0 h R\n";
        let long_symbol = "alphabet: 01\ninitial: a\nhalt: h\na 0 -> h R\n";
        let duplicate = "alphabet: 0\ninitial: a\nhalt: h\na 0 -> h R\na 0 -> a L\n";
        for text in [
            missing_alphabet,
            missing_initial,
            missing_halt,
            bad_rule,
            long_symbol,
            duplicate,
        ] {
            assert!(matches!(TuringMachine::parse(text), Err(Error::Parse(_))));
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\
# a tiny machine
alphabet: 0   # working symbols

initial: a
halt: h
a 0 -> h R  # the only rule
";
        let machine = TuringMachine::parse(text).unwrap();
        assert_eq!(run(&machine, "0", 10).unwrap(), (">0".to_string(), 1));
    }

    #[test]
    fn empty_input_still_has_a_scannable_cell() {
        let text = "alphabet: 0\ninitial: a\nhalt: h\na _ -> h 0\n";
        let machine = TuringMachine::parse(text).unwrap();
        assert_eq!(run(&machine, "", 10).unwrap(), (">0".to_string(), 1));
    }
}
