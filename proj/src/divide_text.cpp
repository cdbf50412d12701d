#include "dkh/divide_text.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace dkh {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        pos++;
    }
    void skip_blanks() {
        while (!done() && (peek() == ' ' || peek() == '\t')) advance();
    }
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) { throw SyntaxError(c.line, c.col, msg); }

// Reads to end of line, returning the trimmed remainder of a comment.
std::string read_comment(Cursor& c) {
    std::string s;
    while (!c.done() && c.peek() != '\n') {
        s += c.peek();
        c.advance();
    }
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::string read_word_token(Cursor& c) {
    std::string s;
    while (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek())) && c.peek() != '#') {
        s += c.peek();
        c.advance();
    }
    return s;
}

void expect_keyword(Cursor& c, const std::string& kw) {
    c.skip_blanks();
    // allow blank lines and comments between sections
    while (!c.done() && (c.peek() == '\n' || c.peek() == '\r' || c.peek() == '#')) {
        if (c.peek() == '#') read_comment(c);
        else c.advance();
        c.skip_blanks();
    }
    if (c.done()) fail(c, "expected '" + kw + ":'");
    const std::string tok = read_word_token(c);
    if (tok != kw + ":") fail(c, "expected '" + kw + ":', found '" + tok + "'");
}

std::vector<WallKind> parse_wall(Cursor& c, const std::string& side) {
    std::vector<WallKind> items;
    for (;;) {
        c.skip_blanks();
        if (c.done() || c.peek() == '\n' || c.peek() == '\r') break;
        if (c.peek() == '#') {
            read_comment(c);
            break;
        }
        const std::string tok = read_word_token(c);
        if (tok == "e") items.push_back(WallKind::Endpoint);
        else if (tok == "m") items.push_back(WallKind::TurnBack);
        else fail(c, side + " wall item must be 'e' or 'm', found '" + tok + "'");
    }
    return items;
}

std::vector<Crossing> parse_word(Cursor& c) {
    std::vector<Crossing> word;
    for (;;) {
        c.skip_blanks();
        if (c.done() || c.peek() == '\n' || c.peek() == '\r') break;
        if (c.peek() == '#') {
            read_comment(c);
            break;
        }
        const int tok_line = c.line, tok_col = c.col;
        const std::string tok = read_word_token(c);
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
            throw SyntaxError(tok_line, tok_col, "crossing must be written +k or -k, found '" + tok + "'");
        for (size_t i = 1; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw SyntaxError(tok_line, tok_col, "crossing position must be an integer, found '" + tok + "'");
        const long pos = std::strtol(tok.c_str() + 1, nullptr, 10);
        if (pos < 1) throw SyntaxError(tok_line, tok_col, "crossing position must be >= 1");
        word.push_back(Crossing{static_cast<int>(pos), tok[0] == '+' ? +1 : -1});
    }
    return word;
}

void skip_line_end(Cursor& c) {
    c.skip_blanks();
    while (!c.done() && (c.peek() == '\n' || c.peek() == '\r')) c.advance();
}

}  // namespace

Divide parse_divide(const std::string& text) {
    Cursor c{text};
    Divide d;

    // optional leading comment: "# name"
    c.skip_blanks();
    while (!c.done() && (c.peek() == '\n' || c.peek() == '\r')) {
        c.advance();
        c.skip_blanks();
    }
    if (!c.done() && c.peek() == '#') {
        c.advance();
        const std::string s = read_comment(c);
        if (d.name.empty()) d.name = s;
    }

    expect_keyword(c, "left");
    d.left_wall = parse_wall(c, "left");
    skip_line_end(c);
    expect_keyword(c, "word");
    d.word = parse_word(c);
    skip_line_end(c);
    expect_keyword(c, "right");
    d.right_wall = parse_wall(c, "right");
    skip_line_end(c);
    while (!c.done()) {
        c.skip_blanks();
        if (c.done()) break;
        if (c.peek() == '#') {
            read_comment(c);
        } else if (c.peek() == '\n' || c.peek() == '\r') {
            c.advance();
        } else {
            fail(c, "unexpected trailing content");
        }
    }

    validate(d);
    return d;
}

std::string emit_divide(const Divide& divide, DivideFormat format) {
    if (format == DivideFormat::Text) {
        std::ostringstream out;
        if (!divide.name.empty()) out << "# " << divide.name << "\n";
        out << "left:";
        for (WallKind k : divide.left_wall) out << (k == WallKind::TurnBack ? " m" : " e");
        out << "\nword:";
        for (const Crossing& cr : divide.word) out << " " << (cr.sign > 0 ? "+" : "-") << cr.position;
        out << "\nright:";
        for (WallKind k : divide.right_wall) out << (k == WallKind::TurnBack ? " m" : " e");
        out << "\n";
        return out.str();
    }

    nlohmann::ordered_json j;
    j["schema"] = 1;
    if (!divide.name.empty()) j["name"] = divide.name;
    j["strands"] = divide.strand_count();
    auto wall = [](const std::vector<WallKind>& w) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (WallKind k : w) a.push_back(k == WallKind::TurnBack ? "m" : "e");
        return a;
    };
    j["left"] = wall(divide.left_wall);
    nlohmann::ordered_json word = nlohmann::ordered_json::array();
    for (const Crossing& cr : divide.word)
        word.push_back({{"pos", cr.position}, {"sign", cr.sign > 0 ? "+" : "-"}});
    j["word"] = word;
    j["right"] = wall(divide.right_wall);
    return j.dump(2) + "\n";
}

}  // namespace dkh
