#!/usr/bin/env python3
"""
Quick smoke runner for treebound
Run this to verify everything is wired up; the full suite is `pytest tests/`
"""

import sys
import os

# Add app to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

def test_imports():
    """Test that all subsystems can be imported"""
    print("🔍 Testing imports...")

    for module in ('app.graph', 'app.enumeration', 'app.invariants',
                   'app.bounds', 'app.families', 'app.pipeline', 'app.reporting'):
        try:
            __import__(module)
            print(f"✅ {module} imported")
        except Exception as e:
            print(f"❌ {module} import error: {e}")

def test_enumeration():
    """Free-tree counts for small orders"""
    print("\n🌲 Testing enumeration...")

    try:
        from app.enumeration import free_tree_count
        expected = {1: 1, 4: 2, 7: 11, 10: 106}
        for n, count in expected.items():
            found = free_tree_count(n)
            mark = "✅" if found == count else "❌"
            print(f"{mark} n={n}: {found} trees (expected {count})")

    except Exception as e:
        print(f"❌ Enumeration error: {e}")

def test_invariants():
    """Index and domination number on P6"""
    print("\n📐 Testing invariants...")

    try:
        from app.graph import path_tree
        from app.invariants import zeroth_order_general_randic, domination_number
        p6 = path_tree(6)
        index = zeroth_order_general_randic(p6, 2)
        gamma = domination_number(p6).gamma
        mark = "✅" if (index, gamma) == (18, 2) else "❌"
        print(f"{mark} P6: index(alpha=2)={index}, gamma={gamma}")

    except Exception as e:
        print(f"❌ Invariants error: {e}")

def test_pipeline():
    """Verify a small order range"""
    print("\n🚀 Testing verification pipeline...")

    try:
        from app.pipeline import get_pipeline
        pipeline = get_pipeline(jobs=1)
        reports = pipeline.verify(3, 8, [2, 0.5])
        violations = sum(r.violations() for r in reports)
        mark = "✅" if violations == 0 else "❌"
        print(f"{mark} n=3..8: {len(reports)} reports, {violations} violations")

    except Exception as e:
        print(f"❌ Pipeline test error: {e}")

def main():
    """Run all checks"""
    print("🧪 treebound - Quick Tests")
    print("=" * 50)

    test_imports()
    test_enumeration()
    test_invariants()
    test_pipeline()

    print("\n" + "=" * 50)
    print("📊 Test Summary:")
    print("- Check any ❌ errors above")
    print("- Run 'pytest tests/' for the exhaustive suite")
    print("- Run 'python main.py verify --min-order 3 --max-order 14' for full certification")

if __name__ == "__main__":
    main()
