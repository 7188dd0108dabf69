use d2rep::strings::StringWord;

/// ASCII zigzag of a string: one row per height level, `o` for basis
/// vectors, `\` for direct letters (descending) and `/` for inverse ones.
/// Each edge is drawn on the row of its upper endpoint.
pub fn render_diagram(word: &StringWord) -> String {
    let mut heights = vec![0i32];
    for l in word.letters() {
        let h = *heights.last().unwrap();
        heights.push(if l.inverse { h + 1 } else { h - 1 });
    }
    let top = *heights.iter().max().unwrap();
    let bottom = *heights.iter().min().unwrap();
    let width = 2 * word.len() + 1;
    let mut rows = vec![vec![' '; width]; (top - bottom + 1) as usize];
    let row = |h: i32| (top - h) as usize;
    for (i, &h) in heights.iter().enumerate() {
        rows[row(h)][2 * i] = 'o';
    }
    for (i, l) in word.letters().iter().enumerate() {
        let upper = heights[i].max(heights[i + 1]);
        rows[row(upper)][2 * i + 1] = if l.inverse { '/' } else { '\\' };
    }
    rows.into_iter().map(|r| r.into_iter().collect::<String>().trim_end().to_string() + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn draw(t: &str) -> String {
        render_diagram(&StringWord::parse(t, 3).unwrap())
    }

    #[test]
    fn small_diagrams() {
        assert_eq!(draw("1a"), "o\n");
        assert_eq!(draw("b"), "o\\\n  o\n");
        assert_eq!(draw("A"), " /o\no\n");
    }

    #[test]
    fn four_letter_zigzag() {
        assert_eq!(draw("aBAb"), "     /o\\\no\\ /o   o\n  o\n");
    }
}
