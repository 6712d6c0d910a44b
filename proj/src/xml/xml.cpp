#include "coanet/xml/xml.hpp"

#include <cctype>
#include <charconv>

namespace coanet::xml {

namespace {

std::string_view local_name(std::string_view qname) {
    size_t pos = qname.rfind(':');
    return pos == std::string_view::npos ? qname : qname.substr(pos + 1);
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp <= 0x7f) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7ff) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp <= 0xffff) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

class Parser {
public:
    explicit Parser(std::string_view doc) : doc_(doc) {}

    Element parse_document() {
        skip_prolog();
        if (eof() || doc_[pos_] != '<')
            fail("expected root element");
        Element root = parse_element();
        skip_misc();
        if (!eof())
            fail("content after root element");
        return root;
    }

private:
    std::string_view doc_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    bool eof() const { return pos_ >= doc_.size(); }
    char peek() const { return doc_[pos_]; }

    bool starts(std::string_view s) const { return doc_.substr(pos_, s.size()) == s; }

    void expect(std::string_view s) {
        if (!starts(s))
            fail("expected '" + std::string(s) + "'");
        pos_ += s.size();
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    void skip_until(std::string_view terminator, const char* what) {
        size_t end = doc_.find(terminator, pos_);
        if (end == std::string_view::npos)
            fail(std::string("unterminated ") + what);
        pos_ = end + terminator.size();
    }

    // XML declaration, processing instructions, comments, DOCTYPE.
    void skip_prolog() {
        while (true) {
            skip_ws();
            if (starts("<?")) {
                skip_until("?>", "processing instruction");
            } else if (starts("<!--")) {
                skip_until("-->", "comment");
            } else if (starts("<!DOCTYPE")) {
                skip_doctype();
            } else {
                return;
            }
        }
    }

    void skip_misc() {
        while (true) {
            skip_ws();
            if (starts("<?"))
                skip_until("?>", "processing instruction");
            else if (starts("<!--"))
                skip_until("-->", "comment");
            else
                return;
        }
    }

    void skip_doctype() {
        // No internal-subset support; tolerate a bracketed block without markup decls.
        int depth = 0;
        while (!eof()) {
            char c = peek();
            ++pos_;
            if (c == '[')
                ++depth;
            else if (c == ']')
                --depth;
            else if (c == '>' && depth == 0)
                return;
        }
        fail("unterminated DOCTYPE");
    }

    bool is_name_start(char c) const {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
               static_cast<unsigned char>(c) >= 0x80;
    }
    bool is_name_char(char c) const {
        return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
               c == '.';
    }

    std::string read_name() {
        if (eof() || !is_name_start(peek()))
            fail("expected name");
        size_t start = pos_;
        while (!eof() && is_name_char(peek()))
            ++pos_;
        return std::string(doc_.substr(start, pos_ - start));
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] != '&') {
                out.push_back(raw[i]);
                ++i;
                continue;
            }
            size_t semi = raw.find(';', i + 1);
            if (semi == std::string_view::npos)
                throw ParseError("unterminated entity reference", pos_);
            std::string_view name = raw.substr(i + 1, semi - i - 1);
            if (name == "lt")
                out.push_back('<');
            else if (name == "gt")
                out.push_back('>');
            else if (name == "amp")
                out.push_back('&');
            else if (name == "apos")
                out.push_back('\'');
            else if (name == "quot")
                out.push_back('"');
            else if (!name.empty() && name[0] == '#') {
                unsigned long cp = 0;
                bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
                std::string_view digits = name.substr(hex ? 2 : 1);
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                                 cp, hex ? 16 : 10);
                if (ec != std::errc{} || ptr != digits.data() + digits.size() || cp > 0x10ffff)
                    throw ParseError("bad character reference", pos_);
                append_utf8(out, cp);
            } else {
                throw ParseError("unknown entity '&" + std::string(name) + ";'", pos_);
            }
            i = semi + 1;
        }
        return out;
    }

    std::string read_attribute_value() {
        if (eof() || (peek() != '"' && peek() != '\''))
            fail("expected quoted attribute value");
        char quote = peek();
        ++pos_;
        size_t start = pos_;
        size_t end = doc_.find(quote, start);
        if (end == std::string_view::npos)
            fail("unterminated attribute value");
        pos_ = end + 1;
        return decode_entities(doc_.substr(start, end - start));
    }

    Element parse_element() {
        Element el;
        el.src_begin = pos_;
        expect("<");
        el.qname = read_name();
        el.name = std::string(local_name(el.qname));

        while (true) {
            skip_ws();
            if (eof())
                fail("unterminated start tag");
            if (starts("/>")) {
                pos_ += 2;
                el.src_end = pos_;
                return el;
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            std::string attr_name = read_name();
            skip_ws();
            expect("=");
            skip_ws();
            el.attributes.emplace_back(std::move(attr_name), read_attribute_value());
        }

        parse_content(el);
        el.src_end = pos_;
        return el;
    }

    void parse_content(Element& el) {
        size_t text_start = pos_;
        auto flush_text = [&](size_t end) {
            if (end > text_start)
                el.text += decode_entities(doc_.substr(text_start, end - text_start));
        };

        while (true) {
            if (eof())
                fail("unterminated element <" + el.qname + ">");
            if (peek() != '<') {
                ++pos_;
                continue;
            }
            flush_text(pos_);
            if (starts("</")) {
                pos_ += 2;
                std::string closing = read_name();
                if (closing != el.qname)
                    fail("mismatched closing tag </" + closing + "> for <" + el.qname + ">");
                skip_ws();
                expect(">");
                return;
            }
            if (starts("<!--")) {
                skip_until("-->", "comment");
            } else if (starts("<![CDATA[")) {
                pos_ += 9;
                size_t end = doc_.find("]]>", pos_);
                if (end == std::string_view::npos)
                    fail("unterminated CDATA section");
                el.text.append(doc_.substr(pos_, end - pos_));
                pos_ = end + 3;
            } else if (starts("<?")) {
                skip_until("?>", "processing instruction");
            } else {
                el.children.push_back(parse_element());
            }
            text_start = pos_;
        }
    }
};

} // namespace

const Element* Element::child(std::string_view name_arg) const {
    for (const Element& c : children) {
        if (c.name == name_arg)
            return &c;
    }
    return nullptr;
}

std::vector<const Element*> Element::children_named(std::string_view name_arg) const {
    std::vector<const Element*> out;
    for (const Element& c : children) {
        if (c.name == name_arg)
            out.push_back(&c);
    }
    return out;
}

bool Element::has_attribute(std::string_view name_arg) const {
    for (const auto& [qname_attr, value] : attributes) {
        (void)value;
        if (local_name(qname_attr) == name_arg)
            return true;
    }
    return false;
}

std::string Element::attribute(std::string_view name_arg, std::string_view fallback) const {
    for (const auto& [qname_attr, value] : attributes) {
        if (local_name(qname_attr) == name_arg)
            return value;
    }
    return std::string(fallback);
}

Element parse(std::string_view document) {
    return Parser(document).parse_document();
}

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

} // namespace coanet::xml
