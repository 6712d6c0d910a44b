#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coanet::xml {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// One parsed element. Tag and attribute names keep their namespace prefix in
/// `qname`; lookups go by local name, which is what OAI-PMH handling needs
/// (responses mix default, oai_dc: and dc: prefixes for the same vocabulary).
struct Element {
    std::string qname;                                        ///< name as written, e.g. "dc:creator"
    std::string name;                                         ///< local part, e.g. "creator"
    std::vector<std::pair<std::string, std::string>> attributes; ///< qualified name -> decoded value
    std::vector<Element> children;
    std::string text;      ///< concatenated direct character data, entities decoded
    size_t src_begin = 0;  ///< byte offset of '<' in the source document
    size_t src_end = 0;    ///< one past the closing '>' in the source document

    const Element* child(std::string_view local_name) const;
    std::vector<const Element*> children_named(std::string_view local_name) const;
    bool has_attribute(std::string_view local_name) const;
    /// Value of the first attribute whose local name matches, or `fallback`.
    std::string attribute(std::string_view local_name, std::string_view fallback = "") const;
};

/// Parse a complete document and return its root element.
/// Throws ParseError on malformed input.
Element parse(std::string_view document);

/// Escape &<>"' for use in element content or attribute values.
std::string escape(std::string_view text);

} // namespace coanet::xml
