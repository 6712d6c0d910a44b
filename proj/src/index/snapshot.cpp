#include "coanet/index/snapshot.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "coanet/errors.hpp"
#include "coanet/util/fnv.hpp"

namespace coanet {

using nlohmann::json;

namespace {

json publication_to_json(const Publication& pub) {
    json authors = json::array();
    for (const auto& a : pub.authors)
        authors.push_back({{"canonical", a.canonical}, {"display", a.display}});
    json ddc = json::array();
    for (const auto& c : pub.ddc_classes)
        ddc.push_back(c.code);
    return {{"authors", std::move(authors)},
            {"datestamp", pub.datestamp.to_string()},
            {"ddc", std::move(ddc)},
            {"record_id", pub.record_id}};
}

Publication publication_from_json(const json& j) {
    Publication pub;
    pub.record_id = j.at("record_id").get<std::string>();
    for (const auto& a : j.at("authors")) {
        pub.authors.push_back({a.at("canonical").get<std::string>(),
                               a.at("display").get<std::string>()});
    }
    for (const auto& c : j.at("ddc")) {
        auto cls = DdcClass::from_code(c.get<std::string>());
        if (!cls)
            throw CorruptSnapshot("invalid DDC code '" + c.get<std::string>() + "'");
        pub.ddc_classes.insert(*cls);
    }
    auto ds = Datestamp::try_parse(j.at("datestamp").get<std::string>());
    if (!ds)
        throw CorruptSnapshot("invalid datestamp '" +
                              j.at("datestamp").get<std::string>() + "'");
    pub.datestamp = *ds;
    return pub;
}

} // namespace

std::string encode_snapshot(const CoauthorIndex& index, const Datestamp& built_at) {
    std::string out;
    json header = {{"built_at", built_at.to_string()},
                   {"format", "coanet-snapshot"},
                   {"format_version", kSnapshotFormatVersion},
                   {"publication_count", index.size()},
                   {"repository_id", index.repository_id()}};
    out += header.dump();
    out += '\n';
    for (const auto& [id, pub] : index.publications()) {
        out += publication_to_json(pub).dump();
        out += '\n';
    }
    Fnv64 h;
    h.update(out);
    out += "fnv64:";
    out += h.hex_digest();
    out += '\n';
    return out;
}

CoauthorIndex decode_snapshot(const std::string& bytes, SnapshotInfo* info) {
    // Locate the trailer: the last non-empty line.
    if (bytes.empty())
        throw CorruptSnapshot("empty snapshot");
    std::size_t end = bytes.size();
    if (bytes.back() == '\n')
        --end;
    if (end == 0)
        throw CorruptSnapshot("missing checksum trailer");
    std::size_t trailer_start = bytes.rfind('\n', end - 1);
    trailer_start = (trailer_start == std::string::npos) ? 0 : trailer_start + 1;
    std::string_view trailer(bytes.data() + trailer_start, end - trailer_start);
    if (trailer.size() != 6 + 16 || trailer.substr(0, 6) != "fnv64:")
        throw CorruptSnapshot("missing checksum trailer");

    Fnv64 h;
    h.update(std::string_view(bytes.data(), trailer_start));
    if (h.hex_digest() != trailer.substr(6))
        throw CorruptSnapshot("checksum mismatch");

    std::istringstream body(bytes.substr(0, trailer_start));
    std::string line;
    if (!std::getline(body, line))
        throw CorruptSnapshot("missing header");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw CorruptSnapshot(std::string("malformed header: ") + e.what());
    }
    if (!header.is_object() || header.value("format", "") != "coanet-snapshot")
        throw CorruptSnapshot("not a coanet snapshot");
    int version = header.value("format_version", -1);
    if (version != kSnapshotFormatVersion)
        throw VersionMismatch("snapshot format_version " + std::to_string(version) +
                              ", expected " + std::to_string(kSnapshotFormatVersion));
    auto built = Datestamp::try_parse(header.value("built_at", ""));
    if (!built)
        throw CorruptSnapshot("invalid built_at in header");
    if (info) {
        info->format_version = version;
        info->built_at = *built;
    }

    CoauthorIndex index(header.value("repository_id", ""));
    std::size_t count = 0;
    while (std::getline(body, line)) {
        if (line.empty())
            continue;
        json j;
        try {
            j = json::parse(line);
            index.ingest(publication_from_json(j));
        } catch (const json::exception& e) {
            throw CorruptSnapshot(std::string("malformed publication: ") + e.what());
        }
        ++count;
    }
    auto expected = header.value("publication_count", std::size_t{0});
    if (count != expected)
        throw CorruptSnapshot("publication count " + std::to_string(count) +
                              " does not match header " + std::to_string(expected));
    return index;
}

void save_snapshot(const CoauthorIndex& index, const std::filesystem::path& path) {
    std::string bytes = encode_snapshot(index);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out)
            throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() +
                      "': " + ec.message());
}

CoauthorIndex load_snapshot(const std::filesystem::path& path, SnapshotInfo* info) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failed for '" + path.string() + "'");
    return decode_snapshot(buf.str(), info);
}

} // namespace coanet
