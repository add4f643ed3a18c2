"""
bundlecheck: P²×P² 안의 Calabi-Yau 3차원 다양체 위 계수 2 다발 구성 검증
"""
__version__ = "0.1.0"
