// Copyright 2026 The chiral-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Parsing of numeric input documents.
//!
//! Numbers may be written in decimal or scientific notation and separated
//! by any mix of whitespace, newlines and commas.

use crate::error::{Error, Result};

/// Parses every number in `text`. Non-numeric or non-finite tokens are
/// reported with their 1-based line and column.
pub fn parse_numbers(text: &str) -> Result<Vec<f64>> {
    let mut numbers = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        let mut rest = line.char_indices().peekable();
        while let Some(&(start, c)) = rest.peek() {
            if is_separator(c) {
                rest.next();
                continue;
            }
            let mut end = line.len();
            while let Some(&(i, c)) = rest.peek() {
                if is_separator(c) {
                    end = i;
                    break;
                }
                rest.next();
            }
            let token = &line[start..end];
            match token.parse::<f64>() {
                Ok(v) if v.is_finite() => numbers.push(v),
                _ => {
                    return Err(Error::Parse {
                        line: line_idx + 1,
                        column: line[..start].chars().count() + 1,
                        message: format!("not a finite number: {token:?}"),
                    })
                }
            }
        }
    }
    Ok(numbers)
}

fn is_separator(c: char) -> bool {
    c == ',' || c.is_whitespace()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_separators() {
        assert_eq!(
            parse_numbers("0, 0, 1\n\n  2.5e1\t-3,,4\r\n").unwrap(),
            vec![0.0, 0.0, 1.0, 25.0, -3.0, 4.0]
        );
        assert_eq!(parse_numbers("").unwrap(), Vec::<f64>::new());
    }

    #[test]
    fn bad_token_position() {
        assert_eq!(
            parse_numbers("1 2\n3 abc 4").unwrap_err(),
            Error::Parse {
                line: 2,
                column: 3,
                message: "not a finite number: \"abc\"".into()
            }
        );
    }

    #[test]
    fn non_finite_tokens_are_rejected() {
        assert!(parse_numbers("1 nan").is_err());
        assert!(parse_numbers("inf").is_err());
        assert!(parse_numbers("1e400").is_err());
    }
}
