#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fcomp {

/// Set of trie nodes, one bit per node. The block count is the node count
/// rounded up to whole 64-bit words; padding bits are always zero, so
/// equality and hashing may look at whole blocks.
class SubsetState {
public:
	static constexpr std::size_t kBlockBits = 64;

	SubsetState() = default;
	explicit SubsetState(std::size_t node_count)
		: node_count_(node_count), blocks_(block_count(node_count), 0) {}

	static std::size_t block_count(std::size_t node_count) noexcept {
		return node_count == 0 ? 1 : (node_count + kBlockBits - 1) / kBlockBits;
	}

	static SubsetState full(std::size_t node_count) {
		SubsetState s(node_count);
		for (std::size_t i = 0; i < node_count; ++i) {
			s.set(i);
		}
		return s;
	}

	std::size_t node_count() const noexcept { return node_count_; }

	bool test(std::size_t i) const noexcept { return (blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1U; }
	void set(std::size_t i) noexcept { blocks_[i / kBlockBits] |= std::uint64_t{1} << (i % kBlockBits); }
	void reset(std::size_t i) noexcept { blocks_[i / kBlockBits] &= ~(std::uint64_t{1} << (i % kBlockBits)); }

	bool empty() const noexcept {
		for (auto b : blocks_) {
			if (b) {
				return false;
			}
		}
		return true;
	}

	std::size_t count() const noexcept {
		std::size_t n = 0;
		for (auto b : blocks_) {
			n += static_cast<std::size_t>(std::popcount(b));
		}
		return n;
	}

	bool intersects(const SubsetState& other) const noexcept {
		for (std::size_t i = 0; i < blocks_.size(); ++i) {
			if (blocks_[i] & other.blocks_[i]) {
				return true;
			}
		}
		return false;
	}

	bool is_subset_of(const SubsetState& other) const noexcept {
		for (std::size_t i = 0; i < blocks_.size(); ++i) {
			if (blocks_[i] & ~other.blocks_[i]) {
				return false;
			}
		}
		return true;
	}

	SubsetState& operator|=(const SubsetState& other) noexcept {
		for (std::size_t i = 0; i < blocks_.size(); ++i) {
			blocks_[i] |= other.blocks_[i];
		}
		return *this;
	}

	std::vector<std::size_t> members() const {
		std::vector<std::size_t> out;
		for (std::size_t b = 0; b < blocks_.size(); ++b) {
			auto bits = blocks_[b];
			while (bits) {
				out.push_back(b * kBlockBits + static_cast<std::size_t>(std::countr_zero(bits)));
				bits &= bits - 1;
			}
		}
		return out;
	}

	std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }
	std::span<std::uint64_t> blocks() noexcept { return blocks_; }

	std::size_t hash() const noexcept { return hash_blocks(blocks_.data(), blocks_.size()); }

	static std::size_t hash_blocks(const std::uint64_t* blocks, std::size_t n) noexcept {
		std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
		for (std::size_t i = 0; i < n; ++i) {
			std::uint64_t x = blocks[i] + 0x9e3779b97f4a7c15ULL * (i + 1);
			x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
			x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
			x ^= x >> 31;
			h = (h ^ x) * 0xff51afd7ed558ccdULL;
			h ^= h >> 33;
		}
		return static_cast<std::size_t>(h);
	}

	bool operator==(const SubsetState&) const = default;

private:
	std::size_t node_count_ = 0;
	std::vector<std::uint64_t> blocks_ = std::vector<std::uint64_t>(1, 0);
};

struct SubsetStateHash {
	std::size_t operator()(const SubsetState& s) const noexcept { return s.hash(); }
};

} // namespace fcomp
