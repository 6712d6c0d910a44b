#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "coanet/extract/publication.hpp"
#include "coanet/oai/types.hpp"
#include "mock_repository.hpp"

namespace coanet::testing {

/// Twelve hand-authored records: five touch DDC 004 (one of them shared with
/// 301), five sit in the 300 main class, two carry 003 as repository-wide
/// noise. Identifiers are oai:fixture:1 .. oai:fixture:12 with datestamps
/// 2024-01-01 .. 2024-01-12.
std::vector<MockRecord> fixture_records();

/// Wire form -> parsed record, for feeding extractors without a server.
OaiRecord to_oai_record(const MockRecord& rec);

/// extract_publication over every fixture record.
std::vector<Publication> fixture_publications();

/// Unique scratch directory below the system temp root; removed recursively
/// on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

} // namespace coanet::testing
