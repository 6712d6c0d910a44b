#pragma once

#include <filesystem>
#include <string>

#include "coanet/index/coauthor_index.hpp"

namespace coanet {

/// Bumped whenever the snapshot layout changes incompatibly.
inline constexpr int kSnapshotFormatVersion = 1;

struct SnapshotInfo {
    Datestamp built_at;
    int format_version = kSnapshotFormatVersion;
};

/// Line-delimited snapshot: a JSON header line (format_version, repository_id,
/// built_at, record count), one JSON publication per line (ordered by
/// record_id), and a trailing "fnv64:<16 hex digits>" checksum of every
/// preceding byte. UTF-8, LF line endings; encoding the same index with the
/// same built_at is byte-identical.
std::string encode_snapshot(const CoauthorIndex& index,
                            const Datestamp& built_at = Datestamp::now());

/// Inverse of encode_snapshot. The checksum is verified before anything else
/// is interpreted; a mismatch throws CorruptSnapshot even if the damage also
/// touched the version field. An intact header with a different
/// format_version throws VersionMismatch.
CoauthorIndex decode_snapshot(const std::string& bytes, SnapshotInfo* info = nullptr);

/// Writes via a temp file and rename so readers never see a partial snapshot.
/// Throws IoError on filesystem failure.
void save_snapshot(const CoauthorIndex& index, const std::filesystem::path& path);

/// Throws IoError if the file cannot be read, otherwise as decode_snapshot.
CoauthorIndex load_snapshot(const std::filesystem::path& path,
                            SnapshotInfo* info = nullptr);

} // namespace coanet
