#include "cremona/io.hpp"

#include <cctype>

namespace cremona {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    Int integer()
    {
        skip_ws();
        size_t start = pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            throw ParseError("expected integer", start);
        // Skip leading zeros: the multiprecision string constructor would
        // read them as an octal prefix.
        size_t first = digits;
        while (first + 1 < pos && text[first] == '0')
            ++first;
        Int value(std::string(text.substr(first, pos - first)));
        return negative ? -value : value;
    }

    Rat rational()
    {
        Int num = integer();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            size_t dpos = pos;
            Int den = integer();
            if (den == 0)
                throw ParseError("zero denominator", dpos);
            if (den < 0) {
                num = -num;
                den = -den;
            }
            return Rat(num, den);
        }
        return Rat(num);
    }

    std::vector<Rat> rational_list(char terminator)
    {
        std::vector<Rat> out;
        if (peek() == terminator)
            return out;
        out.push_back(rational());
        while (accept(','))
            out.push_back(rational());
        return out;
    }
};

}  // namespace

Class parse_class(std::string_view text)
{
    Cursor cur{text};
    if (cur.eof())
        throw ParseError("empty class literal", 0);

    Class result;
    if (cur.accept('(')) {
        result.a = cur.rational();
        cur.expect('|');
        result.b = cur.rational_list(')');
        cur.expect(')');
    } else {
        result.a = cur.rational();
        cur.expect(';');
        result.b = cur.rational_list('\0');
    }
    if (result.b.empty())
        throw ParseError("empty coefficient vector", cur.pos);
    if (!cur.eof())
        throw ParseError("trailing characters", cur.pos);
    return result;
}

std::string format_class(const Class& c)
{
    std::string s = "(" + rat_str(c.a) + "|";
    for (int i = 0; i < c.n(); ++i) {
        if (i)
            s += ",";
        s += rat_str(c.b[i]);
    }
    s += ")";
    return s;
}

std::string format_class_lattice(const Class& c)
{
    std::string s = rat_str(c.a) + ";";
    for (int i = 0; i < c.n(); ++i) {
        if (i)
            s += ",";
        s += rat_str(c.b[i]);
    }
    return s;
}

}  // namespace cremona
