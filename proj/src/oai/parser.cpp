#include "coanet/oai/parser.hpp"

#include <array>
#include <charconv>

#include "coanet/errors.hpp"
#include "coanet/util/strings.hpp"
#include "coanet/xml/xml.hpp"

namespace coanet {

namespace {

constexpr std::array<std::string_view, 15> kDcElements = {
    "contributor", "coverage", "creator",   "date",     "description",
    "format",      "identifier", "language", "publisher", "relation",
    "rights",      "source",   "subject",   "title",    "type",
};

bool is_dc_element(std::string_view name) {
    for (std::string_view dc : kDcElements) {
        if (name == dc)
            return true;
    }
    return false;
}

const xml::Element& parse_oai_envelope(std::string_view xml_text, xml::Element& storage) {
    try {
        storage = xml::parse(xml_text);
    } catch (const xml::ParseError& e) {
        throw ProtocolError(std::string("response is not well-formed XML: ") + e.what());
    }
    if (storage.name != "OAI-PMH")
        throw ProtocolError("root element is <" + storage.qname + ">, expected <OAI-PMH>");
    if (const xml::Element* error = storage.child("error"))
        throw OaiError(error->attribute("code", "unknown"), std::string(trim(error->text)));
    return storage;
}

std::optional<long> parse_long_attr(const xml::Element& el, std::string_view attr) {
    if (!el.has_attribute(attr))
        return std::nullopt;
    std::string value = el.attribute(attr);
    long out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        return std::nullopt;
    return out;
}

Datestamp parse_record_datestamp(const std::string& text, const std::string& identifier) {
    auto ds = Datestamp::try_parse(trim(text));
    if (!ds)
        throw ProtocolError("record '" + identifier + "' has malformed datestamp '" + text + "'");
    return *ds;
}

OaiRecord parse_record(const xml::Element& record_el, std::string_view document) {
    const xml::Element* header = record_el.child("header");
    if (!header)
        throw ProtocolError("record without <header>");

    OaiRecord rec;
    const xml::Element* id_el = header->child("identifier");
    if (!id_el || trim(id_el->text).empty())
        throw ProtocolError("record header without identifier");
    rec.identifier = trim(id_el->text);

    const xml::Element* ds_el = header->child("datestamp");
    if (!ds_el)
        throw ProtocolError("record '" + rec.identifier + "' has no datestamp");
    rec.datestamp = parse_record_datestamp(ds_el->text, rec.identifier);

    for (const xml::Element* set : header->children_named("setSpec"))
        rec.set_specs.emplace_back(trim(set->text));

    rec.deleted = header->attribute("status") == "deleted";
    rec.raw_xml = std::string(document.substr(record_el.src_begin,
                                              record_el.src_end - record_el.src_begin));
    if (rec.deleted)
        return rec;

    // oai_dc payload: <metadata><oai_dc:dc><dc:creator>... Local names only;
    // non-DC elements are ignored rather than rejected.
    if (const xml::Element* metadata = record_el.child("metadata")) {
        if (const xml::Element* dc = metadata->child("dc")) {
            for (const xml::Element& field : dc->children) {
                if (is_dc_element(field.name))
                    rec.dc_fields[field.name].push_back(field.text);
            }
        }
    }
    return rec;
}

} // namespace

RepositoryInfo parse_identify(std::string_view xml_text) {
    xml::Element doc;
    const xml::Element& root = parse_oai_envelope(xml_text, doc);
    const xml::Element* identify = root.child("Identify");
    if (!identify)
        throw ProtocolError("Identify response without <Identify> element");

    auto required = [&](std::string_view name) -> std::string {
        const xml::Element* el = identify->child(name);
        if (!el)
            throw ProtocolError("Identify response missing <" + std::string(name) + ">");
        return std::string(trim(el->text));
    };

    RepositoryInfo info;
    info.repository_name = required("repositoryName");
    info.base_url = required("baseURL");
    info.protocol_version = required("protocolVersion");
    info.earliest_datestamp = required("earliestDatestamp");
    info.granularity = required("granularity");

    if (info.protocol_version != "2.0")
        throw UnsupportedVersion("repository speaks OAI-PMH " + info.protocol_version +
                                 ", only 2.0 is supported");
    return info;
}

ListRecordsPage parse_list_records(std::string_view xml_text) {
    xml::Element doc;
    const xml::Element& root = parse_oai_envelope(xml_text, doc);
    const xml::Element* list = root.child("ListRecords");
    if (!list)
        throw ProtocolError("response has no <ListRecords> element and no <error>");

    ListRecordsPage page;
    for (const xml::Element* record_el : list->children_named("record"))
        page.records.push_back(parse_record(*record_el, xml_text));

    if (const xml::Element* token_el = list->child("resumptionToken")) {
        std::string token(trim(token_el->text));
        if (!token.empty())
            page.resumption_token = std::move(token);
        page.complete_list_size = parse_long_attr(*token_el, "completeListSize");
        page.cursor = parse_long_attr(*token_el, "cursor");
    }
    return page;
}

} // namespace coanet
